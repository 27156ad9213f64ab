#include "wres/prover.hpp"

#include <algorithm>
#include <limits>

namespace wres {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::PositiveBranching: return "positive";
    case Strategy::Theta3: return "theta3";
    case Strategy::Enumeration: return "enumeration";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "positive" || s == "positive-branching") return Strategy::PositiveBranching;
  if (s == "theta3") return Strategy::Theta3;
  if (s == "enumeration") return Strategy::Enumeration;
  return std::nullopt;
}

std::size_t DecisionTree::leaf_count() const {
  std::size_t n = 0;
  for (const Node& node : nodes)
    if (node.kind != Node::Kind::Query) ++n;
  return n;
}

namespace {

// Clause status bookkeeping under a moving partial assignment.
struct Tracker {
  const CnfFormula& f;
  Assignment alpha;
  std::vector<int> true_lits, false_lits, neg_false;
  std::vector<int> neg_count, width;
  std::vector<std::vector<std::pair<int, bool>>> occ;  // var -> (clause, positive)
  int falsified = 0;

  explicit Tracker(const CnfFormula& formula)
      : f(formula),
        alpha(formula.num_vars),
        true_lits(formula.clauses.size(), 0),
        false_lits(formula.clauses.size(), 0),
        neg_false(formula.clauses.size(), 0),
        neg_count(formula.clauses.size(), 0),
        width(formula.clauses.size(), 0),
        occ(static_cast<std::size_t>(formula.num_vars) + 1) {
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
      width[ci] = static_cast<int>(f.clauses[ci].size());
      for (Lit l : f.clauses[ci].lits()) {
        if (!l.positive()) ++neg_count[ci];
        occ[static_cast<std::size_t>(l.var())].emplace_back(static_cast<int>(ci), l.positive());
      }
      if (width[ci] == 0) ++falsified;
    }
  }

  void assign(int var, bool value) {
    alpha.set(var, value);
    for (auto [ci, positive] : occ[static_cast<std::size_t>(var)]) {
      auto i = static_cast<std::size_t>(ci);
      if (positive == value) {
        ++true_lits[i];
      } else {
        if (++false_lits[i] == width[i] && true_lits[i] == 0) ++falsified;
        if (!positive) ++neg_false[i];
      }
    }
  }

  void unassign(int var) {
    bool value = alpha.is_true(var);
    alpha.unset(var);
    for (auto [ci, positive] : occ[static_cast<std::size_t>(var)]) {
      auto i = static_cast<std::size_t>(ci);
      if (positive == value) {
        --true_lits[i];
      } else {
        if (false_lits[i]-- == width[i] && true_lits[i] == 0) --falsified;
        if (!positive) --neg_false[i];
      }
    }
  }

  bool clause_satisfied(std::size_t ci) const { return true_lits[ci] > 0; }
  bool clause_falsified(std::size_t ci) const {
    return true_lits[ci] == 0 && false_lits[ci] == width[ci];
  }

  int first_falsified() const {  // 1-based, 0 if none
    if (falsified == 0) return 0;
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
      if (clause_falsified(ci)) return static_cast<int>(ci) + 1;
    return 0;
  }

  // Not satisfied and every negative literal sits on a true variable.
  bool clause_blocked(std::size_t ci) const {
    return true_lits[ci] == 0 && neg_false[ci] == neg_count[ci];
  }

  int unassigned_positives(std::size_t ci) const {
    // With no true literal, assigned positives are exactly the false ones
    // that are not negatives.
    return (width[ci] - neg_count[ci]) - (false_lits[ci] - neg_false[ci]);
  }

  int first_unassigned_positive(std::size_t ci) const {  // variable id, 0 if none
    for (Lit l : f.clauses[ci].lits())
      if (l.positive() && !alpha.assigned(l.var())) return l.var();
    return 0;
  }

  int smallest_unassigned() const {  // 0 if total
    for (int v = 1; v <= f.num_vars; ++v)
      if (!alpha.assigned(v)) return v;
    return 0;
  }
};

struct Expansion {
  enum class Kind { Leaf, Query, Counterexample } kind;
  int node = -1;   // Leaf
  int var = 0;     // Query
  int clause = -1; // Query: the clause this query caterpillars over, if any
};

class TreeBuilder {
 public:
  TreeBuilder(const ParamInstance& instance, Strategy strategy)
      : inst_(instance), strategy_(strategy), tracker_(instance.formula) {
    if (inst_.mode != Mode::Plain)
      oracle_.emplace(inst_.formula.num_vars, inst_.k, inst_.mode);
    if (strategy_ == Strategy::PositiveBranching || strategy_ == Strategy::Theta3) {
      for (const Clause& c : inst_.formula.clauses)
        if (c.size() > 3)
          throw InvalidParameterError("strategy requires a 3-CNF formula");
    }
    if (strategy_ == Strategy::Theta3 && inst_.mode != Mode::W1)
      throw InvalidParameterError("theta3 strategy requires mode w1");
    if (strategy_ == Strategy::Theta3) {
      for (std::size_t ci = 0; ci < inst_.formula.clauses.size(); ++ci) {
        bool all_pos = !inst_.formula.clauses[ci].empty();
        for (Lit l : inst_.formula.clauses[ci].lits())
          if (!l.positive()) all_pos = false;
        if (all_pos) rows_.push_back(ci);
      }
    }
  }

  BuildResult run() {
    BuildResult result;
    DecisionTree dt;
    struct Frame {
      int var;
      int clause;  // caterpillar commitment carried into the false branch
      int true_child = -1;
      bool on_false_branch = false;
    };
    std::vector<Frame> stack;
    int completed = -1;

    while (true) {
      if (completed < 0) {
        Expansion e = expand(dt);
        if (e.kind == Expansion::Kind::Counterexample) {
          result.counterexample = tracker_.alpha;
          return result;
        }
        if (e.kind == Expansion::Kind::Leaf) {
          completed = e.node;
        } else {
          stack.push_back(Frame{e.var, e.clause});
          continue_clause_ = -1;  // a true branch starts a fresh stage
          tracker_.assign(e.var, true);
          continue;
        }
      }
      if (stack.empty()) {
        dt.root = completed;
        result.tree = std::move(dt);
        return result;
      }
      Frame& top = stack.back();
      if (!top.on_false_branch) {
        top.true_child = completed;
        top.on_false_branch = true;
        tracker_.unassign(top.var);
        tracker_.assign(top.var, false);
        continue_clause_ = top.clause;  // keep walking the same clause
        completed = -1;
      } else {
        tracker_.unassign(top.var);
        DecisionTree::Node node;
        node.kind = DecisionTree::Node::Kind::Query;
        node.var = top.var;
        node.if_true = top.true_child;
        node.if_false = completed;
        dt.nodes.push_back(std::move(node));
        completed = static_cast<int>(dt.nodes.size()) - 1;
        stack.pop_back();
      }
    }
  }

 private:
  const ParamInstance& inst_;
  Strategy strategy_;
  Tracker tracker_;
  std::optional<AxiomOracle> oracle_;
  std::vector<std::size_t> rows_;  // all-positive clauses, theta3 only
  int continue_clause_ = -1;       // active caterpillar clause, -1 when fresh

  // Leaves contributed by the subtree entered when var turns true: 1 when a
  // clause falsifies or an axiom fires immediately, otherwise one more
  // caterpillar over the cheapest blocked clause.
  long true_branch_cost(int var) {
    tracker_.assign(var, true);
    long cost;
    if (tracker_.first_falsified() != 0 ||
        (oracle_ && oracle_->violated_axiom(tracker_.alpha))) {
      cost = 1;
    } else {
      int cheapest = std::numeric_limits<int>::max();
      for (std::size_t ci = 0; ci < inst_.formula.clauses.size(); ++ci)
        if (tracker_.clause_blocked(ci))
          cheapest = std::min(cheapest, tracker_.unassigned_positives(ci));
      cost = cheapest == std::numeric_limits<int>::max() ? 1 : cheapest + 1;
    }
    tracker_.unassign(var);
    return cost;
  }

  Expansion expand(DecisionTree& dt) {
    if (int ci = tracker_.first_falsified(); ci != 0) {
      continue_clause_ = -1;
      DecisionTree::Node node;
      node.kind = DecisionTree::Node::Kind::InputLeaf;
      node.input_index = ci;
      dt.nodes.push_back(std::move(node));
      return {Expansion::Kind::Leaf, static_cast<int>(dt.nodes.size()) - 1, 0, -1};
    }
    if (oracle_) {
      if (auto ax = oracle_->violated_axiom(tracker_.alpha)) {
        continue_clause_ = -1;
        DecisionTree::Node node;
        node.kind = DecisionTree::Node::Kind::AxiomLeaf;
        node.axiom = std::move(*ax);
        dt.nodes.push_back(std::move(node));
        return {Expansion::Kind::Leaf, static_cast<int>(dt.nodes.size()) - 1, 0, -1};
      }
    }
    auto [var, clause] = pick_query();
    continue_clause_ = -1;
    if (var == 0) return {Expansion::Kind::Counterexample, -1, 0, -1};
    return {Expansion::Kind::Query, -1, var, clause};
  }

  std::pair<int, int> pick_query() {
    switch (strategy_) {
      case Strategy::Enumeration:
        return {tracker_.smallest_unassigned(), -1};
      case Strategy::PositiveBranching: {
        // Keep walking the committed clause of the current stage if it still
        // blocks the all-false extension.
        if (continue_clause_ >= 0) {
          auto ci = static_cast<std::size_t>(continue_clause_);
          if (tracker_.clause_blocked(ci))
            if (int v = tracker_.first_unassigned_positive(ci); v != 0)
              return {v, continue_clause_};
        }
        // Estimated leaf count of branching over clause ci: one tail leaf
        // plus, per unassigned positive literal, the caterpillar cost of the
        // cheapest clause blocked once that literal turns true. Exact at the
        // last true-level, a lookahead heuristic above it.
        int best = -1;
        long best_score = std::numeric_limits<long>::max();
        for (std::size_t ci = 0; ci < inst_.formula.clauses.size(); ++ci) {
          if (!tracker_.clause_blocked(ci)) continue;
          long score = 1;
          for (Lit l : inst_.formula.clauses[ci].lits()) {
            if (!l.positive() || tracker_.alpha.assigned(l.var())) continue;
            score += true_branch_cost(l.var());
          }
          if (score < best_score) {
            best_score = score;
            best = static_cast<int>(ci);
          }
        }
        if (best >= 0)
          return {tracker_.first_unassigned_positive(static_cast<std::size_t>(best)), best};
        // No clause blocks the all-false extension; only a satisfiable
        // instance reaches this point. March on to a concrete witness.
        return {tracker_.smallest_unassigned(), -1};
      }
      case Strategy::Theta3: {
        for (std::size_t ci : rows_)
          if (!tracker_.clause_satisfied(ci))
            return {tracker_.first_unassigned_positive(ci), static_cast<int>(ci)};
        return {tracker_.smallest_unassigned(), -1};
      }
    }
    return {0, -1};
  }
};

}  // namespace

BuildResult build_tree(const ParamInstance& instance, Strategy strategy) {
  TreeBuilder builder(instance, strategy);
  return builder.run();
}

Proof tree_to_proof(const DecisionTree& dt, const CnfFormula& formula,
                    const AxiomOracle* oracle) {
  if (dt.root < 0 || dt.root >= static_cast<int>(dt.nodes.size()))
    throw InvalidParameterError("decision tree has no root");

  // Bottom-up clause computation; children precede parents in the array.
  enum class Action { AdoptTrue, AdoptFalse, Resolve, Leaf };
  std::vector<Clause> clause(dt.nodes.size());
  std::vector<Action> action(dt.nodes.size(), Action::Leaf);
  for (std::size_t i = 0; i < dt.nodes.size(); ++i) {
    const auto& node = dt.nodes[i];
    switch (node.kind) {
      case DecisionTree::Node::Kind::InputLeaf:
        if (node.input_index < 1 ||
            node.input_index > static_cast<int>(formula.clauses.size()))
          throw InvalidParameterError("leaf references a clause outside the formula");
        clause[i] = formula.clauses[static_cast<std::size_t>(node.input_index - 1)];
        break;
      case DecisionTree::Node::Kind::AxiomLeaf:
        clause[i] = node.axiom;
        break;
      case DecisionTree::Node::Kind::Query: {
        const Clause& ct = clause[static_cast<std::size_t>(node.if_true)];
        const Clause& cf = clause[static_cast<std::size_t>(node.if_false)];
        bool t_has = ct.contains(Lit::neg(node.var));
        bool f_has = cf.contains(Lit::pos(node.var));
        if (!t_has) {
          action[i] = Action::AdoptTrue;
          clause[i] = ct;
        } else if (!f_has) {
          action[i] = Action::AdoptFalse;
          clause[i] = cf;
        } else {
          action[i] = Action::Resolve;
          clause[i] = resolve_clauses(cf, ct, node.var);
        }
        break;
      }
    }
  }

  Proof proof;
  if (oracle) {
    proof.mode = oracle->mode();
    proof.k = oracle->k();
  }

  // Emit only the needed sub-DAG, positive premise first.
  std::vector<int> step_of(dt.nodes.size(), 0);
  struct Visit {
    int node;
    bool children_done;
  };
  std::vector<Visit> stack{{dt.root, false}};
  while (!stack.empty()) {
    auto [idx, children_done] = stack.back();
    stack.pop_back();
    const auto& node = dt.nodes[static_cast<std::size_t>(idx)];
    auto ui = static_cast<std::size_t>(idx);
    if (step_of[ui] != 0) continue;
    switch (node.kind) {
      case DecisionTree::Node::Kind::InputLeaf: {
        ProofStep s;
        s.id = static_cast<int>(proof.steps.size()) + 1;
        s.kind = StepKind::Input;
        s.input_index = node.input_index;
        proof.steps.push_back(std::move(s));
        step_of[ui] = static_cast<int>(proof.steps.size());
        break;
      }
      case DecisionTree::Node::Kind::AxiomLeaf: {
        ProofStep s;
        s.id = static_cast<int>(proof.steps.size()) + 1;
        s.kind = StepKind::ParamAxiom;
        s.clause = node.axiom;
        proof.steps.push_back(std::move(s));
        step_of[ui] = static_cast<int>(proof.steps.size());
        break;
      }
      case DecisionTree::Node::Kind::Query: {
        if (action[ui] == Action::AdoptTrue) {
          if (step_of[static_cast<std::size_t>(node.if_true)] != 0) {
            step_of[ui] = step_of[static_cast<std::size_t>(node.if_true)];
          } else {
            stack.push_back({idx, true});
            stack.push_back({node.if_true, false});
          }
          break;
        }
        if (action[ui] == Action::AdoptFalse) {
          if (step_of[static_cast<std::size_t>(node.if_false)] != 0) {
            step_of[ui] = step_of[static_cast<std::size_t>(node.if_false)];
          } else {
            stack.push_back({idx, true});
            stack.push_back({node.if_false, false});
          }
          break;
        }
        int tf = step_of[static_cast<std::size_t>(node.if_false)];
        int tt = step_of[static_cast<std::size_t>(node.if_true)];
        if (tf == 0 || tt == 0) {
          stack.push_back({idx, true});
          // positive premise (false branch) emitted first
          stack.push_back({node.if_true, false});
          stack.push_back({node.if_false, false});
          break;
        }
        ProofStep s;
        s.id = static_cast<int>(proof.steps.size()) + 1;
        s.kind = StepKind::Resolve;
        s.premise_a = tf;
        s.premise_b = tt;
        s.pivot = node.var;
        s.clause = clause[ui];
        proof.steps.push_back(std::move(s));
        step_of[ui] = static_cast<int>(proof.steps.size());
        break;
      }
    }
    (void)children_done;
  }

  if (!clause[static_cast<std::size_t>(dt.root)].empty())
    throw InvalidParameterError(
        "decision tree does not refute: root clause " +
        to_string(clause[static_cast<std::size_t>(dt.root)]));
  return proof;
}

ProveResult prove(const ParamInstance& instance, Strategy strategy) {
  ProveResult result;
  BuildResult built = build_tree(instance, strategy);
  if (built.counterexample) {
    const Assignment& cex = *built.counterexample;
    if (!satisfies(instance.formula, cex))
      throw Error("internal: counterexample does not satisfy the formula");
    if (instance.mode == Mode::W1 && cex.weight() != instance.k)
      throw Error("internal: counterexample weight differs from k");
    if (instance.mode == Mode::W2 && cex.weight() > instance.k)
      throw Error("internal: counterexample weight exceeds k");
    result.counterexample = std::move(built.counterexample);
    return result;
  }
  const DecisionTree& dt = *built.tree;
  result.dt_nodes = dt.node_count();
  result.dt_leaves = dt.leaf_count();
  std::optional<AxiomOracle> oracle;
  if (instance.mode != Mode::Plain)
    oracle.emplace(instance.formula.num_vars, instance.k, instance.mode);
  Proof proof = tree_to_proof(dt, instance.formula, oracle ? &*oracle : nullptr);
  result.check_result = check(proof, instance.formula, oracle ? &*oracle : nullptr);
  result.proof = std::move(proof);
  return result;
}

}  // namespace wres
