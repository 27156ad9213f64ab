#include <doctest.h>

#include <algorithm>

#include "wres/axioms.hpp"

using namespace wres;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(61, 30) == 232714176627630544ull);
  CHECK_THROWS_AS(binomial(70, 35), Error);
}

TEST_CASE("axiom membership per mode") {
  AxiomOracle w2(5, 1, Mode::W2);
  CHECK(w2.is_axiom(Clause::of({-2, -5})));
  CHECK_FALSE(w2.is_axiom(Clause::of({-2, 5})));
  CHECK_FALSE(w2.is_axiom(Clause::of({-2})));
  CHECK_FALSE(w2.is_axiom(Clause::of({-1, -2, -3})));
  CHECK_FALSE(w2.is_axiom(Clause::of({1, 2, 3, 4, 5})));  // positives need w1

  AxiomOracle w1(5, 1, Mode::W1);
  CHECK(w1.is_axiom(Clause::of({1, 2, 3, 4, 5})));  // width n-k+1 = 5
  CHECK(w1.is_axiom(Clause::of({-2, -5})));
  CHECK_FALSE(w1.is_axiom(Clause::of({1, 2, 3, 4})));
  CHECK_FALSE(w1.is_axiom(Clause::of({-6, -1})));  // out of range
  CHECK_THROWS_AS(AxiomOracle(5, 1, Mode::Plain), InvalidParameterError);
}

TEST_CASE("axiom membership ignores input literal order") {
  AxiomOracle w2(6, 2, Mode::W2);
  Clause a({Lit::neg(5), Lit::neg(1), Lit::neg(3)});
  Clause b({Lit::neg(3), Lit::neg(5), Lit::neg(1)});
  CHECK(w2.is_axiom(a));
  CHECK(w2.is_axiom(b));
  CHECK(a == b);
}

TEST_CASE("axiom counting") {
  CHECK(AxiomOracle(4, 1, Mode::W2).count_axioms() == 6);
  CHECK(AxiomOracle(4, 1, Mode::W1).count_axioms() == 7);
  CHECK(AxiomOracle(3, 2, Mode::W2).count_axioms() == 1);  // n = k+1
  CHECK(AxiomOracle(4, 6, Mode::W2).count_axioms() == 0);  // k >= n: empty set
  CHECK(AxiomOracle(4, 4, Mode::W1).count_axioms() == 4);  // only units x_i
}

TEST_CASE("axiom enumeration in lexicographic order") {
  auto w2 = AxiomOracle(3, 1, Mode::W2).enumerate_axioms();
  REQUIRE(w2.size() == 3);
  CHECK(w2[0] == Clause::of({-1, -2}));
  CHECK(w2[1] == Clause::of({-1, -3}));
  CHECK(w2[2] == Clause::of({-2, -3}));

  auto w1 = AxiomOracle(2, 1, Mode::W1).enumerate_axioms();
  REQUIRE(w1.size() == 2);
  CHECK(w1[0] == Clause::of({-1, -2}));
  CHECK(w1[1] == Clause::of({1, 2}));

  auto unit = AxiomOracle(1, 0, Mode::W2).enumerate_axioms();
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == Clause::of({-1}));
}

TEST_CASE("enumeration agrees with membership filtering for small n") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (Mode mode : {Mode::W1, Mode::W2}) {
        AxiomOracle oracle(n, k, mode);
        auto enumerated = oracle.enumerate_axioms();
        CHECK(enumerated.size() == oracle.count_axioms());

        // filter every single-phase clause over subsets of [n]
        std::vector<Clause> filtered;
        for (int mask = 1; mask < (1 << n); ++mask) {
          for (bool positive : {false, true}) {
            std::vector<Lit> lits;
            for (int v = 1; v <= n; ++v)
              if ((mask >> (v - 1)) & 1)
                lits.push_back(positive ? Lit::pos(v) : Lit::neg(v));
            Clause c(std::move(lits));
            if (oracle.is_axiom(c)) filtered.push_back(std::move(c));
          }
        }
        std::sort(filtered.begin(), filtered.end());
        std::vector<Clause> sorted = enumerated;
        std::sort(sorted.begin(), sorted.end());
        CHECK(filtered == sorted);
        for (const Clause& c : enumerated) CHECK(oracle.is_axiom(c));
      }
    }
  }
}

TEST_CASE("violated_axiom reports the smallest-id witnesses") {
  AxiomOracle w2(4, 1, Mode::W2);
  Assignment a(4);
  a.set(1, true);
  a.set(3, true);
  CHECK(*w2.violated_axiom(a) == Clause::of({-1, -3}));

  AxiomOracle w1(4, 1, Mode::W1);
  Assignment all_false(4);
  for (int v = 1; v <= 4; ++v) all_false.set(v, false);
  CHECK(*w1.violated_axiom(all_false) == Clause::of({1, 2, 3, 4}));

  AxiomOracle high(4, 3, Mode::W2);
  Assignment one(4);
  one.set(1, true);
  CHECK_FALSE(high.violated_axiom(one).has_value());
}

TEST_CASE("violated axioms are falsified by the triggering assignment") {
  for (Mode mode : {Mode::W1, Mode::W2}) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        AxiomOracle oracle(n, k, mode);
        for (int t = 0; t < (1 << n); ++t) {
          for (int fmask = 0; fmask < (1 << n); ++fmask) {
            if ((t & fmask) != 0) continue;  // disjoint true/false sets
            Assignment a(n);
            for (int v = 1; v <= n; ++v) {
              if ((t >> (v - 1)) & 1) a.set(v, true);
              else if ((fmask >> (v - 1)) & 1) a.set(v, false);
            }
            if (auto ax = oracle.violated_axiom(a))
              CHECK(evaluate(*ax, a) == ClauseEval::Falsified);
          }
        }
      }
    }
  }
}
