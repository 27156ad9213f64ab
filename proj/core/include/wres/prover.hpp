#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wres/axioms.hpp"
#include "wres/cnf.hpp"
#include "wres/proof.hpp"

namespace wres {

// Decision-tree construction policies.
//   PositiveBranching: branch over clauses whose negative literals all sit on
//     currently-true variables, preferring clauses with fewest unassigned
//     positive literals; requires 3-CNF.
//   Theta3: branch row by row over the all-positive clauses in index order;
//     requires 3-CNF and mode W1.
//   Enumeration: query variables in id order; complete fallback for any CNF.
enum class Strategy { PositiveBranching, Theta3, Enumeration };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view s);

// Variable-query tree whose leaves name a falsified input clause or a
// falsified augmentation axiom. Children precede parents in the node array.
struct DecisionTree {
  struct Node {
    enum class Kind { Query, InputLeaf, AxiomLeaf };
    Kind kind = Kind::Query;
    int var = 0;            // Query
    int if_true = -1;       // Query: child index when var is true
    int if_false = -1;      // Query: child index when var is false
    int input_index = 0;    // InputLeaf: 1-based formula clause
    Clause axiom;           // AxiomLeaf
  };
  std::vector<Node> nodes;
  int root = -1;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t leaf_count() const;
};

struct BuildResult {
  std::optional<DecisionTree> tree;
  std::optional<Assignment> counterexample;  // total, satisfying, weight-legal
};

BuildResult build_tree(const ParamInstance& instance, Strategy strategy);

// Standard conversion to a tree-shaped Resolution proof: leaves become
// Input/ParamAxiom steps; a query node resolves its children on the queried
// variable when both resolvent sides mention it, otherwise the child lacking
// the variable is adopted and the sibling subtree is pruned.
Proof tree_to_proof(const DecisionTree& dt, const CnfFormula& formula,
                    const AxiomOracle* oracle);

struct ProveResult {
  std::optional<Proof> proof;
  std::optional<Assignment> counterexample;
  std::size_t dt_nodes = 0;
  std::size_t dt_leaves = 0;
  CheckResult check_result;  // filled when proof is present
};

// build_tree + tree_to_proof; a returned proof has already been re-checked.
ProveResult prove(const ParamInstance& instance, Strategy strategy);

}  // namespace wres
