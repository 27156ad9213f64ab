#include "wres/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Plain: return "plain";
    case Mode::W1: return "w1";
    case Mode::W2: return "w2";
  }
  return "?";
}

std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "plain") return Mode::Plain;
  if (s == "w1") return Mode::W1;
  if (s == "w2") return Mode::W2;
  return std::nullopt;
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::of(std::initializer_list<int> codes) {
  std::vector<Lit> lits;
  lits.reserve(codes.size());
  for (int c : codes) lits.push_back(Lit(c));
  return Clause(std::move(lits));
}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::has_var(int var) const {
  return contains(Lit::pos(var)) || contains(Lit::neg(var));
}

bool Clause::tautological() const {
  for (std::size_t i = 0; i + 1 < lits_.size(); ++i)
    if (lits_[i].var() == lits_[i + 1].var()) return true;
  return false;
}

std::string to_string(const Clause& c) {
  std::ostringstream out;
  bool first = true;
  for (Lit l : c.lits()) {
    if (!first) out << ' ';
    out << l.code();
    first = false;
  }
  if (!first) out << ' ';
  out << '0';
  return out.str();
}

void Assignment::ensure(int var) {
  if (var <= 0) throw MalformedInputError("variable id must be positive");
  if (static_cast<std::size_t>(var) >= state_.size())
    state_.resize(static_cast<std::size_t>(var) + 1, 0);
}

void Assignment::set(int var, bool value) {
  ensure(var);
  auto& s = state_[static_cast<std::size_t>(var)];
  if (s > 0) --trues_;
  if (s < 0) --falses_;
  s = value ? 1 : -1;
  if (value) ++trues_; else ++falses_;
}

void Assignment::unset(int var) {
  if (var <= 0) throw MalformedInputError("variable id must be positive");
  if (static_cast<std::size_t>(var) >= state_.size()) return;
  auto& s = state_[static_cast<std::size_t>(var)];
  if (s > 0) --trues_;
  if (s < 0) --falses_;
  s = 0;
}

std::vector<int> Assignment::true_vars() const {
  std::vector<int> out;
  for (std::size_t v = 1; v < state_.size(); ++v)
    if (state_[v] > 0) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<int> Assignment::false_vars() const {
  std::vector<int> out;
  for (std::size_t v = 1; v < state_.size(); ++v)
    if (state_[v] < 0) out.push_back(static_cast<int>(v));
  return out;
}

bool operator==(const Assignment& a, const Assignment& b) {
  std::size_t n = std::max(a.state_.size(), b.state_.size());
  for (std::size_t v = 1; v < n; ++v) {
    std::int8_t av = v < a.state_.size() ? a.state_[v] : 0;
    std::int8_t bv = v < b.state_.size() ? b.state_[v] : 0;
    if (av != bv) return false;
  }
  return true;
}

ClauseEval evaluate(const Clause& c, const Assignment& a) {
  bool all_assigned = true;
  for (Lit l : c.lits()) {
    auto v = a.get(l.var());
    if (!v) {
      all_assigned = false;
      continue;
    }
    if (*v == l.positive()) return ClauseEval::Satisfied;
  }
  return all_assigned ? ClauseEval::Falsified : ClauseEval::Undetermined;
}

const std::string& CnfFormula::name(int var) const {
  static const std::string empty;
  if (var <= 0 || static_cast<std::size_t>(var) >= var_names.size()) return empty;
  return var_names[static_cast<std::size_t>(var)];
}

void CnfFormula::set_name(int var, std::string name) {
  if (var <= 0 || var > num_vars)
    throw MalformedInputError("name for variable out of range");
  if (var_names.size() < static_cast<std::size_t>(num_vars) + 1)
    var_names.resize(static_cast<std::size_t>(num_vars) + 1);
  var_names[static_cast<std::size_t>(var)] = std::move(name);
}

int CnfFormula::add_var(std::string name) {
  ++num_vars;
  if (!name.empty()) set_name(num_vars, std::move(name));
  return num_vars;
}

void CnfFormula::add_clause(Clause c) {
  if (c.max_var() > num_vars)
    throw MalformedInputError("clause literal beyond declared variable count");
  clauses.push_back(std::move(c));
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const Clause& c : f.clauses)
    if (evaluate(c, a) != ClauseEval::Satisfied) return false;
  return true;
}

std::optional<Clause> restrict_clause(const Clause& c, const Assignment& a) {
  std::vector<Lit> keep;
  for (Lit l : c.lits()) {
    auto v = a.get(l.var());
    if (!v) {
      keep.push_back(l);
      continue;
    }
    if (*v == l.positive()) return std::nullopt;  // satisfied
  }
  return Clause(std::move(keep));
}

RestrictedFormula restrict_formula(const CnfFormula& f, const Assignment& a) {
  RestrictedFormula out;
  out.formula.num_vars = f.num_vars;
  out.formula.var_names = f.var_names;
  out.formula.param_k = f.param_k;
  out.formula.param_mode = f.param_mode;
  out.clause_map.assign(f.clauses.size(), -1);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (auto r = restrict_clause(f.clauses[i], a)) {
      out.clause_map[i] = static_cast<int>(out.formula.clauses.size());
      out.formula.clauses.push_back(std::move(*r));
    }
  }
  return out;
}

}  // namespace wres
