#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wres/axioms.hpp"
#include "wres/cnf.hpp"

namespace wres {

// Enumeration caps. Exceeding a cap raises BudgetExceededError; the oracles
// never sample.
struct Budget {
  std::uint64_t total_assignments = 1ull << 22;
  std::uint64_t combinations = 1'000'000;
};

// WRES_BUDGET, when set, replaces both caps.
Budget budget_from_env();

struct SearchResult {
  bool holds = false;                 // the asserted property holds
  std::optional<Assignment> witness;  // refuting assignment when it does not
};

// No satisfying assignment of weight exactly k. Witness search order:
// weight-k variable subsets in lexicographic order.
SearchResult is_wpcon(const CnfFormula& f, int k, const Budget& b = {});

// No satisfying assignment of weight <= k. Search order: weight 0..k, each
// weight class in lexicographic subset order.
SearchResult is_pcon(const CnfFormula& f, int k, const Budget& b = {});

// No satisfying assignment at all. Total assignments are scanned in
// lexicographic order starting from all-false.
SearchResult is_unsat(const CnfFormula& f, const Budget& b = {}, int jobs = 1);

struct NecessityRecord {
  std::size_t index = 0;     // position in gamma
  bool satisfiable = false;  // f plus everything except this clause
  std::optional<Assignment> witness;
};

struct NecessityReport {
  std::vector<NecessityRecord> records;
  bool all_necessary = false;  // every single removal is satisfiable
};

// For each gamma[i], decides by exhaustive enumeration whether
//   f  +  (gamma minus occurrence i)  +  (all context axioms except gamma[i])
// is satisfiable. The context axioms are consulted lazily per assignment,
// never materialized. A duplicated clause in gamma keeps constraining after
// one occurrence is dropped.
NecessityReport verify_necessity(const CnfFormula& f, const std::vector<Clause>& gamma,
                                 const AxiomOracle* context, const Budget& b = {},
                                 int jobs = 1);

// All m^(k+1) clauses picking one negated variable per theta row, in
// lexicographic tuple order.
std::vector<Clause> gamma_for_theta(int m, int k);

// k odd: all C(n/2, (k+1)/2) clauses negating (k+1)/2 complete psi pairs,
// in lexicographic pair-subset order.
std::vector<Clause> gamma_for_psi(int n, int k);

}  // namespace wres
