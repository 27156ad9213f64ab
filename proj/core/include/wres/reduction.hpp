#pragma once

#include <vector>

#include "wres/cnf.hpp"
#include "wres/proof.hpp"

namespace wres {

// Total literal substitution keyed by source variable id.
struct Substitution {
  std::vector<Lit> image;  // index by source var; image[0] unused

  Lit apply(Lit l) const;
  Clause apply(const Clause& c) const;
};

// Maps the embedded pairing formula's variables onto the twin-pigeonhole
// contradiction: x_i to ~c2, r(i,j) to p(i,j), s(i,j) to q(i,j).
Substitution reduction_substitution(int n, int k);

// Literal-by-literal image with phase composition, normalized afterwards
// (duplicates merge, tautologies are kept).
Clause substitute(const Clause& c, const Substitution& sigma);

// The embedded pairing formula this reduction targets. For odd n the pairing
// part covers floor(n/2) pairs and the leftover variable contributes only
// its embedding clauses.
CnfFormula psi_prime(int n, int k);

struct Reduction {
  CnfFormula pnk;
  CnfFormula psi_prime;
  Substitution sigma;
  Proof derivation;                        // inputs: pnk clauses; one target per psi_prime clause
  std::vector<int> resolutions_per_target; // fresh resolution steps per target
};

// Emits a checker-valid derivation of every substituted psi_prime clause
// from the pnk clauses. Guarded q-clauses are input reuses; everything else
// takes one resolution against (c1 v c2) on c1.
Reduction derive_reduction(int n, int k);

struct CompositionError : Error {
  using Error::Error;
};

// Splices the derivation in front of a plain refutation of psi_prime mapped
// through sigma: input references are rerouted to derivation targets,
// resolution steps whose pivot image vanished from a premise collapse onto
// that premise. The result is re-checked against pnk before returning.
Proof compose(const Proof& derivation, const Proof& refutation, const Substitution& sigma,
              const CnfFormula& pnk, const CnfFormula& psi_prime_formula);

}  // namespace wres
