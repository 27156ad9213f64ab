#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wres/errors.hpp"

namespace wres {

// Flavour of a refutation: plain Resolution, or Resolution with one of the
// two built-in augmentation clause sets.
enum class Mode { Plain, W1, W2 };

std::string_view to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view s);

// A literal in DIMACS convention: the integer -3 denotes the negation of x3.
// Variable ids are strictly positive.
class Lit {
 public:
  Lit() = default;
  explicit Lit(int code) : code_(code) {
    if (code == 0) throw MalformedInputError("literal code must be nonzero");
  }
  static Lit pos(int var) { return Lit(var); }
  static Lit neg(int var) { return Lit(-var); }

  int var() const { return code_ < 0 ? -code_ : code_; }
  bool positive() const { return code_ > 0; }
  int code() const { return code_; }
  Lit negated() const { return Lit(-code_); }

  // Canonical order: ascending variable id, negative phase before positive.
  friend std::strong_ordering operator<=>(Lit a, Lit b) {
    if (auto c = a.var() <=> b.var(); c != 0) return c;
    return static_cast<int>(a.positive()) <=> static_cast<int>(b.positive());
  }
  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }

 private:
  int code_ = 0;
};

// A clause kept in canonical form: literals sorted, exact duplicates removed.
// Both phases of one variable may appear (tautologies are representable).
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);

  // Convenience for literal DIMACS codes, e.g. Clause::of({1, -2}).
  static Clause of(std::initializer_list<int> codes);

  std::span<const Lit> lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Lit l) const;
  bool has_var(int var) const;
  bool tautological() const;
  int max_var() const { return lits_.empty() ? 0 : lits_.back().var(); }

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
    return a.lits_ <=> b.lits_;
  }

 private:
  std::vector<Lit> lits_;
};

// Spec-facing name for the normalizing constructor.
inline Clause clause_normalize(std::vector<Lit> lits) { return Clause(std::move(lits)); }

std::string to_string(const Clause& c);

// Partial truth assignment over variables 1..n.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars) : state_(static_cast<std::size_t>(num_vars) + 1, 0) {}

  void set(int var, bool value);
  void unset(int var);
  bool assigned(int var) const { return value_of(var) != 0; }
  bool is_true(int var) const { return value_of(var) > 0; }
  bool is_false(int var) const { return value_of(var) < 0; }
  std::optional<bool> get(int var) const {
    int v = value_of(var);
    if (v == 0) return std::nullopt;
    return v > 0;
  }

  // Weight: number of variables assigned true.
  int weight() const { return trues_; }
  int false_count() const { return falses_; }
  int assigned_count() const { return trues_ + falses_; }

  std::vector<int> true_vars() const;   // ascending
  std::vector<int> false_vars() const;  // ascending

  friend bool operator==(const Assignment& a, const Assignment& b);

 private:
  std::vector<std::int8_t> state_;  // index by var id; 0 unset, +1 true, -1 false
  int trues_ = 0, falses_ = 0;

  int value_of(int var) const {
    if (var <= 0) throw MalformedInputError("variable id must be positive");
    if (static_cast<std::size_t>(var) >= state_.size()) return 0;
    return state_[static_cast<std::size_t>(var)];
  }
  void ensure(int var);
};

enum class ClauseEval { Satisfied, Falsified, Undetermined };

ClauseEval evaluate(const Clause& c, const Assignment& a);

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> var_names;       // index by var id; "" = unnamed
  std::optional<int> param_k;               // "c param k <k>"
  std::optional<Mode> param_mode;           // "c mode <w1|w2>"
  std::optional<std::string> family;        // "c family <text>", verbatim

  const std::string& name(int var) const;
  void set_name(int var, std::string name);
  int add_var(std::string name = "");
  void add_clause(Clause c);  // rejects literals beyond num_vars
};

// True iff every clause evaluates Satisfied under a (a may be partial).
bool satisfies(const CnfFormula& f, const Assignment& a);

// A formula together with the parameter and the intended refutation mode.
struct ParamInstance {
  CnfFormula formula;
  int k = 0;
  Mode mode = Mode::Plain;
};

// The literals of c that are not false under a, or nullopt if c is satisfied.
std::optional<Clause> restrict_clause(const Clause& c, const Assignment& a);

struct RestrictedFormula {
  CnfFormula formula;
  std::vector<int> clause_map;  // original index -> new index, -1 if satisfied
};

// Applies a to f: deletes satisfied clauses, drops false literals. Variable
// ids and the name table are kept unchanged.
RestrictedFormula restrict_formula(const CnfFormula& f, const Assignment& a);

}  // namespace wres
