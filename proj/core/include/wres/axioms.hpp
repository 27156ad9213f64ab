#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wres/cnf.hpp"

namespace wres {

// C(n, k) in 64-bit arithmetic; throws Error on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Oracle for the built-in augmentation clauses over variables 1..n with
// parameter k. W2 admits exactly the all-negative clauses of width k+1 on
// distinct variables; W1 additionally admits the all-positive clauses of
// width n-k+1. Clauses are never materialized on construction.
class AxiomOracle {
 public:
  AxiomOracle(int num_vars, int k, Mode mode);

  int num_vars() const { return n_; }
  int k() const { return k_; }
  Mode mode() const { return mode_; }

  bool is_axiom(const Clause& c) const;
  std::uint64_t count_axioms() const;

  // If >= k+1 variables are true under a: the negative axiom on the k+1
  // smallest-id true variables. If mode is W1 and >= n-k+1 variables are
  // false: the positive axiom on the n-k+1 smallest-id false variables.
  // Negative axioms are preferred when both apply.
  std::optional<Clause> violated_axiom(const Assignment& a) const;

  // Streaming enumeration: negative axioms in lexicographic variable-tuple
  // order, then (W1) positive axioms likewise. Each axiom appears once.
  class Enumerator {
   public:
    explicit Enumerator(const AxiomOracle& oracle);
    std::optional<Clause> next();

   private:
    const AxiomOracle& o_;
    bool negative_phase_;
    bool fresh_;
    std::vector<int> idx_;
    bool advance(int width);
  };

  Enumerator enumerate() const { return Enumerator(*this); }
  std::vector<Clause> enumerate_axioms() const;  // materialized, small n only

 private:
  int n_, k_;
  Mode mode_;

  int negative_width() const { return k_ + 1; }
  int positive_width() const { return n_ - k_ + 1; }
};

}  // namespace wres
