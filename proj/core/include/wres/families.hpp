#pragma once

#include <optional>
#include <string_view>

#include "wres/cnf.hpp"

namespace wres {

// k+1 disjoint all-positive rows of width m. Variable v^j_i (row i in [k+1],
// column j in [m]) gets id (i-1)*m + j and name v[j][i].
CnfFormula gen_theta(int m, int k);

// Standard chain conversion to 3-CNF. A clause (l1 v ... v lm) with m > 3
// becomes (l1 v l2 v ~z1), (z1 v l3 v ~z2), ..., (z_{m-3} v l_{m-1} v lm)
// with fresh variables appended after all originals, in clause order; the
// j-th fresh variable of source clause i is named z[j][i]. Clauses of width
// <= 3 are copied unchanged.
CnfFormula to_3cnf(const CnfFormula& f);

// to_3cnf(gen_theta(m, k)).
CnfFormula gen_theta3(int m, int k);

// n even: variables v[1..n], clauses (v_i v ~v_{i+1}), (v_{i+1} v ~v_i) for
// each odd i. k is instance metadata only.
CnfFormula gen_psi(int n, std::optional<int> k = std::nullopt);

// Pigeonhole contradiction on n+1 pigeons and n holes: hole clauses
// ~p(i,j) v ~p(l,j) for i < l, then pigeon clauses p(i,1) v ... v p(i,n).
// p(i,j) gets id (i-1)*n + j and name p[i][j].
CnfFormula gen_php(int n);

// Twin guarded pigeonhole contradiction on c1, c2, p(i in [n], j in [k]) and
// q(i in [n], j in [n-k]), for 1 <= k <= n-1.
CnfFormula gen_pnk(int n, int k);

// Augments f with the pigeonhole clauses axiomatizing "exactly k of the n
// declared variables are true": fresh r(i,j) (j in [k]) and s(i,j)
// (j in [n-k]) blocks named r[x<i>][j] / s[x<i>][j]. Degenerate blocks
// (k = 0 or k = n) drop the empty disjunction, leaving the unit guard.
CnfFormula embed_w1(const CnfFormula& f, int k);

// embed_w1(gen_psi(n), k) with its own provenance tag.
CnfFormula gen_psi_embedded(int n, int k);

enum class Family { Theta, Theta3, Psi, Php, Pnk, EmbedW1, PsiEmbedded };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view s);

struct FamilySpec {
  Family family = Family::Theta;
  std::optional<int> m, n, k;
};

// Dispatches on spec.family; base is required for EmbedW1 only.
CnfFormula generate(const FamilySpec& spec, const CnfFormula* base = nullptr);

}  // namespace wres
