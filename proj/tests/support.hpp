#pragma once

// Test-only helpers: an independently coded brute-force evaluator and proof
// auditor used to cross-check the library, plus the deterministic corpus of
// small 3-CNF contradictions. Nothing here calls back into the code paths it
// checks.

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wres/axioms.hpp"
#include "wres/cnf.hpp"
#include "wres/families.hpp"
#include "wres/proof.hpp"
#include "wres/semantics.hpp"

namespace testsupport {

inline bool naive_clause_sat(const wres::Clause& c, const std::vector<char>& a) {
  for (wres::Lit l : c.lits())
    if ((a[static_cast<std::size_t>(l.var())] != 0) == l.positive()) return true;
  return false;
}

inline bool naive_formula_sat(const wres::CnfFormula& f, const std::vector<char>& a) {
  for (const auto& c : f.clauses)
    if (!naive_clause_sat(c, a)) return false;
  return true;
}

// Enumerates every total assignment with an odometer; pred takes (values,
// weight) and the walk stops at the first model accepted by weight_ok.
template <class WeightOk>
inline bool naive_exists_model(const wres::CnfFormula& f, WeightOk weight_ok) {
  std::vector<char> a(static_cast<std::size_t>(f.num_vars) + 1, 0);
  while (true) {
    int w = 0;
    for (int v = 1; v <= f.num_vars; ++v) w += a[static_cast<std::size_t>(v)];
    if (weight_ok(w) && naive_formula_sat(f, a)) return true;
    int i = 1;
    while (i <= f.num_vars && a[static_cast<std::size_t>(i)] == 1) {
      a[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i > f.num_vars) return false;
    a[static_cast<std::size_t>(i)] = 1;
  }
}

// Semantic audit of a whole proof, separate from wres::check. Returns an
// empty string when every step is rule-valid and the target is reached.
inline std::string naive_audit(const wres::Proof& p, const wres::CnfFormula& f,
                               const wres::AxiomOracle* oracle) {
  using LitSet = std::set<int>;
  auto set_of = [](const wres::Clause& c) {
    LitSet s;
    for (wres::Lit l : c.lits()) s.insert(l.code());
    return s;
  };
  std::vector<std::pair<int, LitSet>> derived;  // (id, literal set)
  auto find = [&](int id) -> const LitSet* {
    for (auto& [sid, s] : derived)
      if (sid == id) return &s;
    return nullptr;
  };
  int prev = 0;
  for (const auto& s : p.steps) {
    if (s.id <= prev) return "nonascending id";
    prev = s.id;
    LitSet me;
    switch (s.kind) {
      case wres::StepKind::Input: {
        if (s.input_index < 1 || s.input_index > static_cast<int>(f.clauses.size()))
          return "bad input index";
        me = set_of(f.clauses[static_cast<std::size_t>(s.input_index - 1)]);
        break;
      }
      case wres::StepKind::ParamAxiom: {
        if (!oracle) return "axiom without oracle";
        me = set_of(s.clause);
        bool neg = true, pos = true;
        std::set<int> vars;
        for (int code : me) {
          if (code > 0) neg = false;
          if (code < 0) pos = false;
          int v = code > 0 ? code : -code;
          if (v > oracle->num_vars()) return "axiom variable out of range";
          vars.insert(v);
        }
        if (vars.size() != me.size()) return "axiom repeats a variable";
        int w = static_cast<int>(me.size());
        bool ok = (neg && w == oracle->k() + 1) ||
                  (oracle->mode() == wres::Mode::W1 && pos &&
                   w == oracle->num_vars() - oracle->k() + 1);
        if (!ok) return "clause is not an augmentation axiom";
        break;
      }
      case wres::StepKind::Resolve: {
        const LitSet* a = find(s.premise_a);
        const LitSet* b = find(s.premise_b);
        if (!a || !b || s.premise_a >= s.id || s.premise_b >= s.id) return "bad premise";
        if (!a->count(s.pivot)) return "positive pivot absent";
        if (!b->count(-s.pivot)) return "negative pivot absent";
        me = *a;
        me.erase(s.pivot);
        for (int code : *b)
          if (code != -s.pivot) me.insert(code);
        if (me != set_of(s.clause)) return "derived clause differs";
        break;
      }
      case wres::StepKind::Weaken: {
        const LitSet* a = find(s.premise_a);
        if (!a || s.premise_a >= s.id) return "bad premise";
        me = *a;
        me.insert(s.added.code());
        if (me != set_of(s.clause)) return "derived clause differs";
        break;
      }
    }
    derived.emplace_back(s.id, std::move(me));
  }
  if (p.is_refutation()) {
    if (derived.empty() || !derived.back().second.empty()) return "no empty clause at sink";
    return "";
  }
  for (const auto& t : p.targets) {
    LitSet want = set_of(t);
    bool found = false;
    for (auto& [sid, s] : derived)
      if (s == want) {
        found = true;
        break;
      }
    if (!found) return "target not derived";
  }
  return "";
}

// All 2^w sign patterns over the given variables; a contradiction by
// construction.
inline wres::CnfFormula complete_contradiction(const std::vector<int>& vars, int num_vars) {
  wres::CnfFormula f;
  f.num_vars = num_vars;
  int w = static_cast<int>(vars.size());
  for (int pattern = 0; pattern < (1 << w); ++pattern) {
    std::vector<wres::Lit> lits;
    for (int i = 0; i < w; ++i) {
      int v = vars[static_cast<std::size_t>(i)];
      lits.push_back((pattern >> i) & 1 ? wres::Lit::pos(v) : wres::Lit::neg(v));
    }
    f.add_clause(wres::Clause(std::move(lits)));
  }
  return f;
}

// Pairing clauses pinned to an odd-weight corner: a contradiction.
inline wres::CnfFormula pinned_pairing(int n, int pin) {
  wres::CnfFormula f = wres::gen_psi(n);
  f.add_clause(wres::Clause::of({pin}));
  f.add_clause(wres::Clause::of({-(pin + 1)}));
  f.family.reset();
  f.param_mode.reset();
  return f;
}

// Equivalence constraints around an odd cycle with one inversion.
inline wres::CnfFormula xor_cycle(int n) {
  wres::CnfFormula f;
  f.num_vars = n;
  for (int i = 1; i <= n; ++i) {
    int j = i % n + 1;
    f.add_clause(wres::Clause::of({i, j}));
    f.add_clause(wres::Clause::of({-i, -j}));
  }
  return f;
}

// Deterministic corpus of brute-force-verified 3-CNF contradictions on at
// most 10 variables. Every member is re-verified by the caller.
inline std::vector<std::pair<std::string, wres::CnfFormula>> contradiction_corpus() {
  std::vector<std::pair<std::string, wres::CnfFormula>> corpus;
  corpus.emplace_back("complete-1", complete_contradiction({1}, 1));
  corpus.emplace_back("complete-2", complete_contradiction({1, 2}, 2));
  corpus.emplace_back("complete-2-offset", complete_contradiction({3, 7}, 7));
  corpus.emplace_back("complete-2-high", complete_contradiction({9, 10}, 10));
  corpus.emplace_back("complete-3", complete_contradiction({1, 2, 3}, 3));
  corpus.emplace_back("complete-3-sparse", complete_contradiction({2, 5, 9}, 9));
  corpus.emplace_back("complete-3-mid", complete_contradiction({4, 5, 6}, 6));
  corpus.emplace_back("php-3-2", wres::gen_php(2));
  corpus.emplace_back("pnk-2-1", wres::gen_pnk(2, 1));
  corpus.emplace_back("pairing-4", pinned_pairing(4, 1));
  corpus.emplace_back("pairing-6", pinned_pairing(6, 1));
  corpus.emplace_back("pairing-8", pinned_pairing(8, 3));
  corpus.emplace_back("xor-3", xor_cycle(3));
  corpus.emplace_back("xor-5", xor_cycle(5));
  corpus.emplace_back("xor-7", xor_cycle(7));
  corpus.emplace_back("xor-9", xor_cycle(9));
  {
    wres::CnfFormula f;  // unit implication chain closed on both ends
    f.num_vars = 4;
    f.add_clause(wres::Clause::of({1}));
    f.add_clause(wres::Clause::of({-1, 2}));
    f.add_clause(wres::Clause::of({-2, 3}));
    f.add_clause(wres::Clause::of({-3, 4}));
    f.add_clause(wres::Clause::of({-4}));
    corpus.emplace_back("implication-chain", std::move(f));
  }
  {
    wres::CnfFormula f;  // positive units against one wide negative clause
    f.num_vars = 3;
    f.add_clause(wres::Clause::of({1}));
    f.add_clause(wres::Clause::of({2}));
    f.add_clause(wres::Clause::of({3}));
    f.add_clause(wres::Clause::of({-1, -2, -3}));
    corpus.emplace_back("anti-horn", std::move(f));
  }
  {
    // a wide clause fed through the chain rewriting, pinned unsatisfiable
    wres::CnfFormula wide;
    wide.num_vars = 4;
    wide.add_clause(wres::Clause::of({1, 2, 3, 4}));
    wres::CnfFormula f = wres::to_3cnf(wide);
    for (int v = 1; v <= 4; ++v) f.add_clause(wres::Clause::of({-v}));
    corpus.emplace_back("chained-wide", std::move(f));
  }
  {
    wres::CnfFormula f = complete_contradiction({1, 2}, 4);  // plus side stage
    f.add_clause(wres::Clause::of({-3, 4}));
    f.add_clause(wres::Clause::of({3, -4}));
    corpus.emplace_back("complete-2-padded", std::move(f));
  }
  {
    wres::CnfFormula f = wres::gen_php(2);  // pigeons first instead of holes
    std::reverse(f.clauses.begin(), f.clauses.end());
    f.family.reset();
    corpus.emplace_back("php-3-2-reversed", std::move(f));
  }
  {
    wres::CnfFormula f = xor_cycle(5);  // redundant twin constraint
    f.add_clause(wres::Clause::of({1, 2}));
    corpus.emplace_back("xor-5-redundant", std::move(f));
  }
  return corpus;
}

}  // namespace testsupport
