#include <doctest.h>

#include "wres/families.hpp"
#include "wres/proof.hpp"
#include "wres/prover.hpp"
#include "support.hpp"

using namespace wres;

namespace {

CnfFormula unit_pair() {
  CnfFormula f;
  f.num_vars = 1;
  f.add_clause(Clause::of({1}));
  f.add_clause(Clause::of({-1}));
  return f;
}

Proof three_step() {
  return parse_proof("p proof 3\n1 I 1\n2 I 2\n3 R 1 2 1 0\n");
}

}  // namespace

TEST_CASE("three step refutation checks with size 3") {
  CheckResult r = check(three_step(), unit_pair());
  CHECK(r.size == 3);
  CHECK(r.total_steps == 3);
  CHECK(r.leaves == 2);
}

TEST_CASE("resolution follows the textbook rule") {
  CnfFormula f;
  f.num_vars = 3;
  f.add_clause(Clause::of({1, 2}));
  f.add_clause(Clause::of({-2, 3}));
  Proof p = parse_proof("p proof 3\n1 I 1\n2 I 2\n3 R 1 2 2 1 3 0\n");
  CHECK_THROWS_AS(check(p, f), CheckFailure);  // refutation target missing
  p.targets.push_back(Clause::of({1, 3}));
  CheckResult r = check(p, f);
  CHECK(r.size == 3);
}

TEST_CASE("tautology premises resolve literally") {
  CnfFormula f;
  f.num_vars = 2;
  f.add_clause(Clause::of({1, -1, 2}));
  f.add_clause(Clause::of({-1}));
  Proof p = parse_proof("p proof 3 plain 0\n1 I 1\n2 I 2\n3 R 1 2 1 -1 2 0\n");
  p.targets.push_back(Clause::of({-1, 2}));
  CHECK_NOTHROW(check(p, f));
}

TEST_CASE("weakening adds a literal and may build tautologies") {
  CnfFormula f;
  f.num_vars = 2;
  f.add_clause(Clause::of({1}));
  Proof p = parse_proof("p proof 2 plain 0\n1 I 1\n2 W 1 -1 -1 1 0\n");
  p.targets.push_back(Clause::of({-1, 1}));
  CHECK_NOTHROW(check(p, f));

  Proof bad = parse_proof("p proof 2 plain 0\n1 I 1\n2 W 1 -5 -5 1 0\n");
  bad.targets.push_back(Clause::of({-5, 1}));
  CHECK_THROWS_AS(check(bad, f), CheckFailure);  // variable out of range
}

TEST_CASE("mixed polarity axioms are rejected under w2") {
  CnfFormula f = gen_theta(2, 1);
  AxiomOracle oracle(4, 1, Mode::W2);
  Proof p = parse_proof("p proof 1 w2 1\n1 A -1 2 0\n");
  p.targets.push_back(Clause::of({-1, 2}));
  try {
    check(p, f, &oracle);
    CHECK(false);
  } catch (const CheckFailure& e) {
    CHECK(e.reason == CheckReason::AxiomRejected);
    CHECK(e.step_id == 1);
  }
}

TEST_CASE("each failure names the offending step") {
  CnfFormula f = unit_pair();
  auto reason_of = [&](const std::string& text) {
    Proof p = parse_proof(text);
    try {
      check(p, f);
      return std::string("accepted");
    } catch (const CheckFailure& e) {
      return std::string(to_string(e.reason));
    }
  };
  CHECK(reason_of("p proof 3\n1 I 1\n2 I 2\n3 R 1 5 1 0\n") == "bad-premise-reference");
  CHECK(reason_of("p proof 3\n1 I 1\n2 I 2\n3 R 3 2 1 0\n") == "bad-premise-reference");
  CHECK(reason_of("p proof 3\n1 I 1\n2 I 9\n3 R 1 2 1 0\n") == "bad-input-index");
  CHECK(reason_of("p proof 3\n1 I 1\n2 I 2\n3 R 2 1 1 0\n") == "pivot-absent");
  CHECK(reason_of("p proof 3\n1 I 1\n2 I 2\n3 R 1 2 1 1 0\n") == "derived-clause-mismatch");
  CHECK(reason_of("p proof 3\n1 I 1\n2 I 2\n2 R 1 2 1 0\n") == "bad-step-id");
  CHECK(reason_of("p proof 2\n1 I 1\n2 I 2\n") == "target-not-derived");
}

TEST_CASE("unreachable steps are excluded from size but counted in total") {
  CnfFormula f = unit_pair();
  Proof p = parse_proof("p proof 4\n1 I 1\n2 I 2\n3 W 1 -1 -1 1 0\n4 R 1 2 1 0\n");
  CheckResult r = check(p, f);
  CHECK(r.size == 3);
  CHECK(r.total_steps == 4);
}

TEST_CASE("proof round trip is identity on emitted text") {
  std::vector<std::string> texts{
      "p proof 3 plain 0\n1 I 1\n2 I 2\n3 R 1 2 1 0\n",
      "p proof 2 w2 1\n1 A -1 -3 0\n2 W 1 2 -1 2 -3 0\nt -1 2 -3 0\n",
  };
  for (const std::string& text : texts) {
    Proof p = parse_proof(text);
    CHECK(emit_proof(p) == text);
  }
  // short header normalizes to the full form
  Proof p = parse_proof("p proof 3\n1 I 1\n2 I 2\n3 R 1 2 1 0\n");
  CHECK(emit_proof(p) == "p proof 3 plain 0\n1 I 1\n2 I 2\n3 R 1 2 1 0\n");
}

TEST_CASE("axiom trace lines parse into normalized clauses") {
  Proof p = parse_proof("p proof 1 w2 1\n1 A -1 -3 0\n");
  REQUIRE(p.steps.size() == 1);
  CHECK(p.steps[0].kind == StepKind::ParamAxiom);
  CHECK(p.steps[0].clause == Clause::of({-1, -3}));
  CHECK(p.mode == Mode::W2);
  CHECK(p.k == 1);
}

TEST_CASE("proof parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_proof("1 I 1\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("p proof 1\n1 I 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("p proof 1\n1 R 1 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("p proof 2\n1 I 1\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("p proof 1 bogus 0\n1 I 1\n"), ParseError);
  try {
    parse_proof("p proof 1\n1 A -1 0 7\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("restriction of the chained refutation") {
  CnfFormula f;
  f.num_vars = 2;
  f.add_clause(Clause::of({1}));
  f.add_clause(Clause::of({-1, 2}));
  f.add_clause(Clause::of({-2}));
  Proof p = parse_proof(
      "p proof 5\n1 I 1\n2 I 2\n3 R 1 2 1 2 0\n4 I 3\n5 R 3 4 2 0\n");
  CHECK_NOTHROW(check(p, f));

  Assignment a(2);
  a.set(1, true);
  Proof restricted = restrict_proof(p, a, f);
  RestrictedFormula rf = restrict_formula(f, a);
  REQUIRE(rf.formula.clauses.size() == 2);
  CHECK(rf.formula.clauses[0] == Clause::of({2}));
  CHECK(rf.formula.clauses[1] == Clause::of({-2}));
  CheckResult r = check(restricted, rf.formula);
  CHECK(r.size <= 5);
  CHECK(restricted.steps.size() <= p.steps.size());
}

TEST_CASE("empty restriction leaves a proof unchanged") {
  CnfFormula f = unit_pair();
  Proof p = three_step();
  Proof same = restrict_proof(p, Assignment(), f);
  CHECK(emit_proof(same) == emit_proof(p));
}

TEST_CASE("restriction output re-checks and never grows on refutations") {
  auto corpus = testsupport::contradiction_corpus();
  std::mt19937 rng(5150);
  int exercised = 0;
  for (const auto& [name, f] : corpus) {
    if (f.num_vars > 8) continue;
    ParamInstance inst{f, 0, Mode::Plain};
    ProveResult pr = prove(inst, Strategy::Enumeration);
    REQUIRE(pr.proof.has_value());
    for (int trial = 0; trial < 4; ++trial) {
      Assignment a(f.num_vars);
      for (int v = 1; v <= f.num_vars; ++v)
        if (rng() % 3 == 0) a.set(v, rng() % 2);
      CAPTURE(name);
      Proof restricted = restrict_proof(*pr.proof, a, f);
      RestrictedFormula rf = restrict_formula(f, a);
      CheckResult before = check(*pr.proof, f);
      CheckResult after = check(restricted, rf.formula);
      CHECK(after.size <= before.size);
      ++exercised;
    }
  }
  CHECK(exercised >= 20);
}

TEST_CASE("restricting a pnk refutation by the guard strips one side") {
  CnfFormula f = gen_pnk(3, 1);
  ParamInstance inst{f, 0, Mode::Plain};
  ProveResult pr = prove(inst, Strategy::Enumeration);
  REQUIRE(pr.proof.has_value());

  Assignment a(f.num_vars);
  a.set(1, true);  // c1 := true
  Proof restricted = restrict_proof(*pr.proof, a, f);
  RestrictedFormula rf = restrict_formula(f, a);
  // the c1-guarded clauses lose their guard: a pigeonhole copy plus ~c2
  CHECK(rf.formula.clauses[0] == Clause::of({-2}));
  CheckResult r = check(restricted, rf.formula);
  CHECK(r.size <= check(*pr.proof, f).size);
}

TEST_CASE("restriction trivializing a derivation target is an error") {
  CnfFormula f;
  f.num_vars = 2;
  f.add_clause(Clause::of({1, 2}));
  Proof p = parse_proof("p proof 1\n1 I 1\nt 1 2 0\n");
  CHECK_NOTHROW(check(p, f));
  Assignment a(2);
  a.set(1, true);
  CHECK_THROWS_AS(restrict_proof(p, a, f), RestrictionError);
}
