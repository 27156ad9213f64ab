#include <doctest.h>

#include "wres/families.hpp"
#include "wres/semantics.hpp"
#include "support.hpp"

using namespace wres;

TEST_CASE("is_wpcon on the pairing family") {
  CnfFormula psi4 = gen_psi(4);
  CHECK(is_wpcon(psi4, 1).holds);

  SearchResult r = is_wpcon(psi4, 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->true_vars() == std::vector<int>{1, 2});

  CHECK(is_wpcon(gen_pnk(2, 1), 1).holds);  // unsatisfiable formulas hold trivially
}

TEST_CASE("is_pcon on theta") {
  CnfFormula t21 = gen_theta(2, 1);
  CHECK(is_pcon(t21, 1).holds);

  SearchResult r = is_pcon(t21, 2);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->true_vars() == std::vector<int>{1, 3});  // v[1][1], v[1][2]

  CnfFormula empty;
  SearchResult e = is_pcon(empty, 0);
  CHECK_FALSE(e.holds);
  CHECK(e.witness->weight() == 0);
}

TEST_CASE("is_unsat basics") {
  CHECK(is_unsat(gen_php(2)).holds);
  CHECK(is_unsat(gen_php(3)).holds);
  CHECK(is_unsat(gen_pnk(3, 1)).holds);

  SearchResult r = is_unsat(gen_psi(4));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->weight() == 0);  // all-false comes first
}

TEST_CASE("prefix-split scans match the sequential witness") {
  CnfFormula f = gen_psi(6);
  f.add_clause(Clause::of({5}));  // forces v5 = v6 = true
  SearchResult seq = is_unsat(f, {}, 1);
  SearchResult par = is_unsat(f, {}, 4);
  CHECK(seq.holds == par.holds);
  REQUIRE(seq.witness.has_value());
  REQUIRE(par.witness.has_value());
  CHECK(seq.witness->true_vars() == par.witness->true_vars());
}

TEST_CASE("weighted oracles agree with an independent total enumerator") {
  auto corpus = testsupport::contradiction_corpus();
  corpus.emplace_back("psi6", gen_psi(6));
  corpus.emplace_back("theta22", gen_theta(2, 2));
  corpus.emplace_back("php2", gen_php(2));
  for (const auto& [name, f] : corpus) {
    if (f.num_vars > 10) continue;
    for (int k = 0; k <= std::min(4, f.num_vars); ++k) {
      bool naive_exact =
          testsupport::naive_exists_model(f, [k](int w) { return w == k; });
      bool naive_upto =
          testsupport::naive_exists_model(f, [k](int w) { return w <= k; });
      CAPTURE(name);
      CHECK(is_wpcon(f, k).holds == !naive_exact);
      CHECK(is_pcon(f, k).holds == !naive_upto);
    }
    CHECK(is_unsat(f).holds ==
          !testsupport::naive_exists_model(f, [](int) { return true; }));
  }
}

TEST_CASE("budget limits raise instead of sampling") {
  Budget tiny;
  tiny.total_assignments = 4;
  tiny.combinations = 2;
  CnfFormula f = gen_php(2);  // 6 variables
  CHECK_THROWS_AS(is_unsat(f, tiny), BudgetExceededError);
  CHECK_THROWS_AS(is_wpcon(f, 3, tiny), BudgetExceededError);
  CHECK_THROWS_AS(verify_necessity(f, {Clause::of({-1})}, nullptr, tiny),
                  BudgetExceededError);
}

TEST_CASE("gamma_for_theta enumerates one pick per row") {
  auto g = gamma_for_theta(2, 1);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == Clause::of({-1, -3}));
  CHECK(g[1] == Clause::of({-1, -4}));
  CHECK(g[2] == Clause::of({-2, -3}));
  CHECK(g[3] == Clause::of({-2, -4}));

  AxiomOracle w2(4, 1, Mode::W2);
  for (const Clause& c : g) CHECK(w2.is_axiom(c));
}

TEST_CASE("gamma_for_psi enumerates pair blocks") {
  auto g41 = gamma_for_psi(4, 1);
  REQUIRE(g41.size() == 2);
  CHECK(g41[0] == Clause::of({-1, -2}));
  CHECK(g41[1] == Clause::of({-3, -4}));

  auto g63 = gamma_for_psi(6, 3);
  REQUIRE(g63.size() == 3);
  for (const Clause& c : g63) CHECK(c.size() == 4);
  CHECK(g63[0] == Clause::of({-1, -2, -3, -4}));

  AxiomOracle w1(6, 3, Mode::W1);
  for (const Clause& c : g63) CHECK(w1.is_axiom(c));

  CHECK_THROWS_AS(gamma_for_psi(4, 2), InvalidParameterError);
  CHECK_THROWS_AS(gamma_for_psi(5, 1), InvalidParameterError);
}

TEST_CASE("every theta gamma clause is necessary") {
  CnfFormula t21 = gen_theta(2, 1);
  auto gamma = gamma_for_theta(2, 1);
  AxiomOracle oracle(t21.num_vars, 1, Mode::W2);
  NecessityReport rep = verify_necessity(t21, gamma, &oracle);
  CHECK(rep.all_necessary);
  REQUIRE(rep.records.size() == 4);
  // dropping (~v11 v ~v12) is witnessed by making exactly those two true
  REQUIRE(rep.records[0].witness.has_value());
  CHECK(rep.records[0].witness->true_vars() == std::vector<int>{1, 3});
  for (const auto& rec : rep.records) {
    REQUIRE(rec.witness.has_value());
    CHECK(satisfies(t21, *rec.witness));
    for (std::size_t j = 0; j < gamma.size(); ++j)
      if (j != rec.index)
        CHECK(evaluate(gamma[j], *rec.witness) == ClauseEval::Satisfied);
  }
}

TEST_CASE("psi gamma necessity at 6 3") {
  CnfFormula psi6 = gen_psi(6);
  auto gamma = gamma_for_psi(6, 3);
  AxiomOracle oracle(6, 3, Mode::W1);
  NecessityReport rep = verify_necessity(psi6, gamma, &oracle);
  CHECK(rep.all_necessary);
  // dropping a pair-block clause is witnessed by setting its two pairs true
  REQUIRE(rep.records[0].witness.has_value());
  CHECK(rep.records[0].witness->true_vars() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("duplicated gamma clauses are not necessary") {
  CnfFormula t21 = gen_theta(2, 1);
  std::vector<Clause> gamma = gamma_for_theta(2, 1);
  gamma.push_back(gamma[0]);  // duplicate one clause
  AxiomOracle oracle(4, 1, Mode::W2);
  NecessityReport rep = verify_necessity(t21, gamma, &oracle);
  CHECK_FALSE(rep.all_necessary);
  CHECK_FALSE(rep.records[0].satisfiable);      // the twin still constrains
  CHECK_FALSE(rep.records.back().satisfiable);
  CHECK(rep.records[1].satisfiable);
}

TEST_CASE("necessity without context uses only the listed clauses") {
  CnfFormula f;
  f.num_vars = 2;
  f.add_clause(Clause::of({1, 2}));
  std::vector<Clause> gamma{Clause::of({-1}), Clause::of({-2})};
  NecessityReport rep = verify_necessity(f, gamma, nullptr);
  CHECK(rep.all_necessary);
  // dropping (~x1) frees the lexicographically first model x1=1, x2=0
  CHECK(rep.records[0].witness->true_vars() == std::vector<int>{1});
  CHECK(rep.records[1].witness->true_vars() == std::vector<int>{2});
}

TEST_CASE("parallel necessity equals sequential") {
  CnfFormula t31 = gen_theta(3, 1);
  auto gamma = gamma_for_theta(3, 1);
  AxiomOracle oracle(6, 1, Mode::W2);
  NecessityReport seq = verify_necessity(t31, gamma, &oracle, {}, 1);
  NecessityReport par = verify_necessity(t31, gamma, &oracle, {}, 4);
  REQUIRE(seq.records.size() == par.records.size());
  for (std::size_t i = 0; i < seq.records.size(); ++i) {
    CHECK(seq.records[i].satisfiable == par.records[i].satisfiable);
    CHECK(seq.records[i].witness.has_value() == par.records[i].witness.has_value());
    if (seq.records[i].witness)
      CHECK(seq.records[i].witness->true_vars() == par.records[i].witness->true_vars());
  }
}
