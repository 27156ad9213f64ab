#include "wres/reduction.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "wres/families.hpp"

namespace wres {

Lit Substitution::apply(Lit l) const {
  if (l.var() <= 0 || static_cast<std::size_t>(l.var()) >= image.size() ||
      image[static_cast<std::size_t>(l.var())].code() == 0)
    throw MalformedInputError("substitution undefined for variable " + std::to_string(l.var()));
  Lit target = image[static_cast<std::size_t>(l.var())];
  return l.positive() ? target : target.negated();
}

Clause Substitution::apply(const Clause& c) const {
  std::vector<Lit> lits;
  lits.reserve(c.size());
  for (Lit l : c.lits()) lits.push_back(apply(l));
  return Clause(std::move(lits));
}

Clause substitute(const Clause& c, const Substitution& sigma) { return sigma.apply(c); }

Substitution reduction_substitution(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidParameterError("reduction requires n >= 2 and 1 <= k <= n-1");
  const int c2 = 2;
  Substitution sigma;
  sigma.image.resize(static_cast<std::size_t>(n + n * k + n * (n - k)) + 1);
  for (int i = 1; i <= n; ++i) sigma.image[static_cast<std::size_t>(i)] = Lit::neg(c2);
  // r(i,j) and s(i,j) land on p(i,j) and q(i,j); both blocks share the same
  // id offset between the two formulas.
  for (int v = n + 1; v <= n + n * k + n * (n - k); ++v)
    sigma.image[static_cast<std::size_t>(v)] = Lit::pos(v - n + 2);
  return sigma;
}

CnfFormula psi_prime(int n, int k) {
  if (n % 2 == 0) return gen_psi_embedded(n, k);
  CnfFormula base;
  base.num_vars = n;
  for (int i = 1; i <= n; ++i) base.set_name(i, "v[" + std::to_string(i) + "]");
  for (int i = 1; i + 1 <= n; i += 2) {
    base.add_clause(Clause({Lit::pos(i), Lit::neg(i + 1)}));
    base.add_clause(Clause({Lit::pos(i + 1), Lit::neg(i)}));
  }
  CnfFormula out = embed_w1(base, k);
  out.family = "psi-embedded n=" + std::to_string(n) + " k=" + std::to_string(k);
  return out;
}

Reduction derive_reduction(int n, int k) {
  Reduction red;
  red.pnk = gen_pnk(n, k);
  red.psi_prime = psi_prime(n, k);
  red.sigma = reduction_substitution(n, k);

  Proof& d = red.derivation;
  d.comments.push_back(
      "derives the substituted embedded-pairing clauses from the twin pigeonhole clauses");
  d.comments.push_back(
      "tautology and c2-headed targets resolve the matching c1-guarded clause with (c1 v c2) on c1");

  std::map<Clause, int> pnk_index;  // clause -> 1-based input index
  for (std::size_t i = 0; i < red.pnk.clauses.size(); ++i)
    pnk_index.emplace(red.pnk.clauses[i], static_cast<int>(i) + 1);

  std::map<Clause, int> derived;  // clause -> step id
  int next_id = 0;

  auto input_step = [&](const Clause& c) -> int {
    if (auto it = derived.find(c); it != derived.end()) return it->second;
    auto idx = pnk_index.find(c);
    if (idx == pnk_index.end())
      throw Error("internal-consistency: expected input clause missing: " + to_string(c));
    ProofStep s;
    s.id = ++next_id;
    s.kind = StepKind::Input;
    s.input_index = idx->second;
    d.steps.push_back(std::move(s));
    derived.emplace(c, next_id);
    return next_id;
  };

  const Clause neg_pair = Clause::of({-1, -2});  // (~c1 v ~c2)
  const Clause pos_pair = Clause::of({1, 2});    // (c1 v c2)

  // Resolves the c1-guarded premise with (c1 v c2) on c1; returns the number
  // of fresh resolution steps (0 when the target was already derived).
  auto resolve_on_c1 = [&](const Clause& guarded, const Clause& target) -> int {
    if (derived.count(target)) return 0;
    int a = input_step(pos_pair);   // positive pivot side
    int b = input_step(guarded);    // carries ~c1
    ProofStep s;
    s.id = ++next_id;
    s.kind = StepKind::Resolve;
    s.premise_a = a;
    s.premise_b = b;
    s.pivot = 1;
    s.clause = resolve_clauses(pos_pair, guarded, 1);
    if (s.clause != target)
      throw Error("internal-consistency: derived " + to_string(s.clause) + ", wanted " +
                  to_string(target));
    d.steps.push_back(std::move(s));
    derived.emplace(target, next_id);
    return 1;
  };

  for (const Clause& c : red.psi_prime.clauses) {
    // Structural image: x-variables collapse onto c2, r/s shift onto p/q.
    std::vector<Lit> lits;
    bool pairing = true;     // clause on x-variables only
    bool guard_neg = false;  // contains ~x_i, so the image is c2-headed
    for (Lit l : c.lits()) {
      if (l.var() <= n) {
        lits.push_back(l.positive() ? Lit::neg(2) : Lit::pos(2));
        if (!l.positive()) guard_neg = true;
      } else {
        pairing = false;
        lits.push_back(l.positive() ? Lit::pos(l.var() - n + 2) : Lit::neg(l.var() - n + 2));
      }
    }
    Clause target(std::move(lits));
    red.derivation.targets.push_back(target);

    int fresh = 0;
    if (pairing) {
      fresh = resolve_on_c1(neg_pair, target);
    } else if (guard_neg) {
      // image (c2 v p-literals); the premise puts ~c1 back in place of c2
      std::vector<Lit> prem{Lit::neg(1)};
      for (Lit l : target.lits())
        if (l.var() != 2) prem.push_back(l);
      fresh = resolve_on_c1(Clause(std::move(prem)), target);
    } else {
      if (!derived.count(target)) input_step(target);  // identical to a pnk clause
    }
    red.resolutions_per_target.push_back(fresh);
  }

  // Cross-check the structural targets against the substitution.
  std::vector<Clause> expected;
  expected.reserve(red.psi_prime.clauses.size());
  for (const Clause& c : red.psi_prime.clauses) expected.push_back(substitute(c, red.sigma));
  std::vector<Clause> got = red.derivation.targets;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (expected != got)
    throw Error("internal-consistency: target multiset differs from the substituted clauses");
  return red;
}

Proof compose(const Proof& derivation, const Proof& refutation, const Substitution& sigma,
              const CnfFormula& pnk, const CnfFormula& psi_prime_formula) {
  if (!refutation.is_refutation())
    throw CompositionError("second argument must be a refutation");
  if (refutation.mode != Mode::Plain)
    throw CompositionError("only plain refutations can be composed");

  Proof out;
  out.mode = Mode::Plain;

  // Renumber the derivation steps into the front of the composite proof.
  std::unordered_map<int, int> deriv_id;
  std::map<Clause, int> deriv_clause_step;  // first deriving step per clause
  int next_id = 0;
  for (const ProofStep& s : derivation.steps) {
    ProofStep ns = s;
    ns.id = ++next_id;
    if (s.kind == StepKind::Resolve) {
      ns.premise_a = deriv_id.at(s.premise_a);
      ns.premise_b = deriv_id.at(s.premise_b);
    } else if (s.kind == StepKind::Weaken) {
      ns.premise_a = deriv_id.at(s.premise_a);
    }
    deriv_id.emplace(s.id, ns.id);
    Clause c = s.kind == StepKind::Input
        ? pnk.clauses.at(static_cast<std::size_t>(s.input_index - 1))
        : s.clause;
    deriv_clause_step.emplace(std::move(c), ns.id);
    out.steps.push_back(std::move(ns));
  }

  struct Mapped {
    int id = 0;
    Clause clause;
  };
  std::unordered_map<int, Mapped> mapped;

  for (const ProofStep& s : refutation.steps) {
    switch (s.kind) {
      case StepKind::Input: {
        if (s.input_index < 1 ||
            s.input_index > static_cast<int>(psi_prime_formula.clauses.size()))
          throw CompositionError("refutation input index out of range at step " +
                                 std::to_string(s.id));
        Clause image = substitute(
            psi_prime_formula.clauses[static_cast<std::size_t>(s.input_index - 1)], sigma);
        auto it = deriv_clause_step.find(image);
        if (it == deriv_clause_step.end())
          throw CompositionError("derivation does not cover input clause " +
                                 std::to_string(s.input_index));
        mapped[s.id] = Mapped{it->second, image};
        break;
      }
      case StepKind::ParamAxiom:
        throw CompositionError("refutation must be oracle-free at step " + std::to_string(s.id));
      case StepKind::Weaken: {
        const Mapped& p = mapped.at(s.premise_a);
        Lit added = sigma.apply(s.added);
        std::vector<Lit> lits(p.clause.lits().begin(), p.clause.lits().end());
        lits.push_back(added);
        Clause derived(std::move(lits));
        ProofStep ns;
        ns.id = ++next_id;
        ns.kind = StepKind::Weaken;
        ns.premise_a = p.id;
        ns.added = added;
        ns.clause = derived;
        out.steps.push_back(std::move(ns));
        mapped[s.id] = Mapped{ns.id, std::move(derived)};
        break;
      }
      case StepKind::Resolve: {
        const Mapped& a = mapped.at(s.premise_a);
        const Mapped& b = mapped.at(s.premise_b);
        Lit pivot_image = sigma.apply(Lit::pos(s.pivot));
        if (!a.clause.contains(pivot_image)) {
          // pivot image vanished while narrowing; the premise already
          // subsumes the resolvent image
          mapped[s.id] = a;
          break;
        }
        if (!b.clause.contains(pivot_image.negated())) {
          mapped[s.id] = b;
          break;
        }
        const Mapped& pos_side = pivot_image.positive() ? a : b;
        const Mapped& neg_side = pivot_image.positive() ? b : a;
        ProofStep ns;
        ns.id = ++next_id;
        ns.kind = StepKind::Resolve;
        ns.premise_a = pos_side.id;
        ns.premise_b = neg_side.id;
        ns.pivot = pivot_image.var();
        ns.clause = resolve_clauses(pos_side.clause, neg_side.clause, pivot_image.var());
        Clause derived = ns.clause;
        out.steps.push_back(std::move(ns));
        mapped[s.id] = Mapped{next_id, std::move(derived)};
        break;
      }
    }
  }

  if (refutation.steps.empty()) throw CompositionError("empty refutation");
  const Mapped& sink = mapped.at(refutation.steps.back().id);
  if (!sink.clause.empty())
    throw CompositionError("composite sink is not the empty clause: " + to_string(sink.clause));
  while (!out.steps.empty() && out.steps.back().id > sink.id) out.steps.pop_back();

  check(out, pnk, nullptr);
  return out;
}

}  // namespace wres
