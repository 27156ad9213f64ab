#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wres/axioms.hpp"
#include "wres/cnf.hpp"

namespace wres {

enum class StepKind { Input, ParamAxiom, Resolve, Weaken };

struct ProofStep {
  int id = 0;
  StepKind kind = StepKind::Input;
  int input_index = 0;               // Input: 1-based clause index
  int premise_a = 0, premise_b = 0;  // Resolve premises; premise_a also Weaken
  int pivot = 0;                     // Resolve pivot variable
  Lit added;                         // Weaken added literal
  Clause clause;                     // declared clause (ParamAxiom/Resolve/Weaken)
};

struct Proof {
  Mode mode = Mode::Plain;
  int k = 0;
  std::vector<ProofStep> steps;
  std::vector<Clause> targets;        // empty: refutation of the empty clause
  std::vector<std::string> comments;  // emitted before the header

  bool is_refutation() const { return targets.empty(); }
};

enum class CheckReason {
  BadStepId,
  BadPremiseReference,
  BadInputIndex,
  PivotAbsent,
  DerivedClauseMismatch,
  AxiomRejected,
  TargetNotDerived,
  VariableOutOfRange,
};

std::string_view to_string(CheckReason r);

struct CheckFailure : Error {
  CheckFailure(int step_id, CheckReason reason, const std::string& detail);
  int step_id;
  CheckReason reason;
};

struct CheckResult {
  std::size_t size = 0;         // steps reachable from the target step(s)
  std::size_t total_steps = 0;  // every step in the trace
  std::size_t leaves = 0;       // reachable Input/ParamAxiom steps
  std::size_t axiom_steps = 0;  // reachable ParamAxiom steps
};

// Validates every step against the formula (and the oracle for w1/w2 traces;
// oracle must be present exactly when proof.mode is not Plain). Throws
// CheckFailure naming the offending step. Size counts only steps reachable
// from the sink: the final empty clause for refutations, or the first
// deriving step of each target for derivations.
CheckResult check(const Proof& proof, const CnfFormula& formula,
                  const AxiomOracle* oracle = nullptr);

struct RestrictionError : Error {
  using Error::Error;
};

// Resolution of (P v x) and (Q v ~x) on x under the literal rule: only the
// resolved pair is removed, other duplicate-variable literals stay.
Clause resolve_clauses(const Clause& pos_premise, const Clause& neg_premise, int pivot);

// Applies a to a proof that checks against formula. Steps whose clause is
// satisfied by a are elided and their uses rerouted; surviving derived
// clauses shrink to subsets of their restrictions. Input references are
// reindexed against restrict_formula(formula, a). For refutations the result
// is never larger; derivation targets that come out strictly stronger are
// rebuilt by weakening. Throws RestrictionError if a satisfies a target.
Proof restrict_proof(const Proof& proof, const Assignment& a, const CnfFormula& formula);

// Line-oriented trace:
//   p proof <nsteps> <plain|w1|w2> <k>
//   <id> I <clauseIndex>
//   <id> A <lit>... 0
//   <id> R <idA> <idB> <pivotVar> <lit>... 0
//   <id> W <idPremise> <addedLit> <lit>... 0
//   t <lit>... 0
// The short header "p proof <nsteps>" is accepted on parse (plain, k = 0);
// emission always writes the full form.
Proof parse_proof(std::string_view text);
std::string emit_proof(const Proof& proof);

}  // namespace wres
