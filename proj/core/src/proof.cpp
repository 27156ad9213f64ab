#include "wres/proof.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace wres {

std::string_view to_string(CheckReason r) {
  switch (r) {
    case CheckReason::BadStepId: return "bad-step-id";
    case CheckReason::BadPremiseReference: return "bad-premise-reference";
    case CheckReason::BadInputIndex: return "bad-input-index";
    case CheckReason::PivotAbsent: return "pivot-absent";
    case CheckReason::DerivedClauseMismatch: return "derived-clause-mismatch";
    case CheckReason::AxiomRejected: return "axiom-rejected";
    case CheckReason::TargetNotDerived: return "target-not-derived";
    case CheckReason::VariableOutOfRange: return "variable-out-of-range";
  }
  return "?";
}

CheckFailure::CheckFailure(int step_id, CheckReason reason, const std::string& detail)
    : Error("step " + std::to_string(step_id) + ": " + std::string(to_string(reason)) +
            (detail.empty() ? "" : " (" + detail + ")")),
      step_id(step_id),
      reason(reason) {}

Clause resolve_clauses(const Clause& pos_premise, const Clause& neg_premise, int pivot) {
  std::vector<Lit> lits;
  lits.reserve(pos_premise.size() + neg_premise.size());
  for (Lit l : pos_premise.lits())
    if (!(l.var() == pivot && l.positive())) lits.push_back(l);
  for (Lit l : neg_premise.lits())
    if (!(l.var() == pivot && !l.positive())) lits.push_back(l);
  return Clause(std::move(lits));
}

CheckResult check(const Proof& proof, const CnfFormula& formula, const AxiomOracle* oracle) {
  if (proof.mode == Mode::Plain && oracle)
    throw InvalidParameterError("plain proof checked with an oracle");
  if (proof.mode != Mode::Plain) {
    if (!oracle) throw InvalidParameterError("parameterized proof requires an oracle");
    if (oracle->mode() != proof.mode || oracle->k() != proof.k)
      throw InvalidParameterError("oracle mode/k does not match the proof header");
  }

  const std::size_t count = proof.steps.size();
  std::vector<Clause> clauses(count);
  std::unordered_map<int, std::size_t> by_id;
  by_id.reserve(count);

  auto premise_pos = [&](int step_id, int ref) -> std::size_t {
    auto it = by_id.find(ref);
    if (it == by_id.end() || ref >= step_id)
      throw CheckFailure(step_id, CheckReason::BadPremiseReference,
                         "premise " + std::to_string(ref));
    return it->second;
  };

  int prev_id = 0;
  for (std::size_t pos = 0; pos < count; ++pos) {
    const ProofStep& s = proof.steps[pos];
    if (s.id <= prev_id)
      throw CheckFailure(s.id, CheckReason::BadStepId, "ids must be ascending and positive");
    prev_id = s.id;

    switch (s.kind) {
      case StepKind::Input: {
        if (s.input_index < 1 || s.input_index > static_cast<int>(formula.clauses.size()))
          throw CheckFailure(s.id, CheckReason::BadInputIndex,
                             "index " + std::to_string(s.input_index));
        clauses[pos] = formula.clauses[static_cast<std::size_t>(s.input_index - 1)];
        break;
      }
      case StepKind::ParamAxiom: {
        if (!oracle || !oracle->is_axiom(s.clause))
          throw CheckFailure(s.id, CheckReason::AxiomRejected, to_string(s.clause));
        clauses[pos] = s.clause;
        break;
      }
      case StepKind::Resolve: {
        const Clause& a = clauses[premise_pos(s.id, s.premise_a)];
        const Clause& b = clauses[premise_pos(s.id, s.premise_b)];
        if (s.pivot < 1 || s.pivot > formula.num_vars)
          throw CheckFailure(s.id, CheckReason::VariableOutOfRange,
                             "pivot " + std::to_string(s.pivot));
        if (!a.contains(Lit::pos(s.pivot)))
          throw CheckFailure(s.id, CheckReason::PivotAbsent,
                             "positive pivot missing from premise " + std::to_string(s.premise_a));
        if (!b.contains(Lit::neg(s.pivot)))
          throw CheckFailure(s.id, CheckReason::PivotAbsent,
                             "negative pivot missing from premise " + std::to_string(s.premise_b));
        Clause computed = resolve_clauses(a, b, s.pivot);
        if (computed != s.clause)
          throw CheckFailure(s.id, CheckReason::DerivedClauseMismatch,
                             "expected " + to_string(computed));
        clauses[pos] = std::move(computed);
        break;
      }
      case StepKind::Weaken: {
        const Clause& p = clauses[premise_pos(s.id, s.premise_a)];
        if (s.added.var() < 1 || s.added.var() > formula.num_vars)
          throw CheckFailure(s.id, CheckReason::VariableOutOfRange,
                             "weakening literal " + std::to_string(s.added.code()));
        std::vector<Lit> lits(p.lits().begin(), p.lits().end());
        lits.push_back(s.added);
        Clause computed(std::move(lits));
        if (computed != s.clause)
          throw CheckFailure(s.id, CheckReason::DerivedClauseMismatch,
                             "expected " + to_string(computed));
        clauses[pos] = std::move(computed);
        break;
      }
    }
    by_id.emplace(s.id, pos);
  }

  // Locate the sink steps.
  std::vector<std::size_t> sinks;
  if (proof.is_refutation()) {
    if (count == 0 || !clauses[count - 1].empty())
      throw CheckFailure(count == 0 ? 0 : proof.steps[count - 1].id,
                         CheckReason::TargetNotDerived, "final step must derive the empty clause");
    sinks.push_back(count - 1);
  } else {
    std::map<Clause, std::size_t> first_deriving;
    for (std::size_t pos = 0; pos < count; ++pos)
      first_deriving.emplace(clauses[pos], pos);  // keeps the first position
    std::vector<bool> used(count, false);
    for (const Clause& t : proof.targets) {
      auto it = first_deriving.find(t);
      if (it == first_deriving.end())
        throw CheckFailure(0, CheckReason::TargetNotDerived, to_string(t));
      if (!used[it->second]) {
        used[it->second] = true;
        sinks.push_back(it->second);
      }
    }
  }

  // Backward reachability over premise edges.
  std::vector<bool> reach(count, false);
  std::vector<std::size_t> stack = sinks;
  for (std::size_t s : stack) reach[s] = true;
  while (!stack.empty()) {
    std::size_t pos = stack.back();
    stack.pop_back();
    const ProofStep& s = proof.steps[pos];
    auto visit = [&](int ref) {
      std::size_t p = by_id.at(ref);
      if (!reach[p]) {
        reach[p] = true;
        stack.push_back(p);
      }
    };
    if (s.kind == StepKind::Resolve) {
      visit(s.premise_a);
      visit(s.premise_b);
    } else if (s.kind == StepKind::Weaken) {
      visit(s.premise_a);
    }
  }

  CheckResult res;
  res.total_steps = count;
  for (std::size_t pos = 0; pos < count; ++pos) {
    if (!reach[pos]) continue;
    ++res.size;
    StepKind k = proof.steps[pos].kind;
    if (k == StepKind::Input || k == StepKind::ParamAxiom) ++res.leaves;
    if (k == StepKind::ParamAxiom) ++res.axiom_steps;
  }
  return res;
}

namespace {

struct StepOut {
  bool satisfied = false;
  int new_id = 0;      // valid when !satisfied
  Clause clause;       // clause of the surviving step
};

}  // namespace

Proof restrict_proof(const Proof& proof, const Assignment& a, const CnfFormula& formula) {
  RestrictedFormula rf = restrict_formula(formula, a);

  std::optional<AxiomOracle> oracle;
  if (proof.mode != Mode::Plain)
    oracle.emplace(formula.num_vars, proof.k, proof.mode);

  Proof out;
  out.mode = proof.mode;
  out.k = proof.k;
  out.comments = proof.comments;

  std::unordered_map<int, StepOut> outs;
  int next_id = 0;

  auto emit = [&](ProofStep s, Clause clause) -> StepOut {
    s.id = ++next_id;
    s.clause = s.kind == StepKind::Input ? Clause() : clause;
    out.steps.push_back(std::move(s));
    return StepOut{false, next_id, std::move(clause)};
  };

  auto live = [&](int id) -> const StepOut& {
    const StepOut& o = outs.at(id);
    if (o.satisfied)
      throw RestrictionError("internal: satisfied premise survives at step " + std::to_string(id));
    return o;
  };

  for (const ProofStep& s : proof.steps) {
    const Clause& old_clause = s.kind == StepKind::Input
        ? formula.clauses[static_cast<std::size_t>(s.input_index - 1)]
        : s.clause;
    auto restricted = restrict_clause(old_clause, a);
    if (!restricted) {
      outs[s.id] = StepOut{true, 0, Clause()};
      continue;
    }
    switch (s.kind) {
      case StepKind::Input: {
        ProofStep ns;
        ns.kind = StepKind::Input;
        ns.input_index = rf.clause_map[static_cast<std::size_t>(s.input_index - 1)] + 1;
        outs[s.id] = emit(std::move(ns), std::move(*restricted));
        break;
      }
      case StepKind::ParamAxiom: {
        if (*restricted != old_clause && oracle && !oracle->is_axiom(*restricted))
          throw RestrictionError("restriction strips a parameterized axiom at step " +
                                 std::to_string(s.id));
        ProofStep ns;
        ns.kind = StepKind::ParamAxiom;
        outs[s.id] = emit(std::move(ns), std::move(*restricted));
        break;
      }
      case StepKind::Weaken: {
        // The premise cannot be satisfied: its clause is a subset of this one.
        const StepOut& p = live(s.premise_a);
        auto lv = a.get(s.added.var());
        if (lv && *lv != s.added.positive()) {
          outs[s.id] = p;  // the added literal is gone; reuse the premise
          break;
        }
        std::vector<Lit> lits(p.clause.lits().begin(), p.clause.lits().end());
        lits.push_back(s.added);
        Clause derived(std::move(lits));
        ProofStep ns;
        ns.kind = StepKind::Weaken;
        ns.premise_a = p.new_id;
        ns.added = s.added;
        outs[s.id] = emit(std::move(ns), std::move(derived));
        break;
      }
      case StepKind::Resolve: {
        auto pv = a.get(s.pivot);
        if (pv && *pv) {  // positive premise satisfied via the pivot
          outs[s.id] = live(s.premise_b);
          break;
        }
        if (pv && !*pv) {
          outs[s.id] = live(s.premise_a);
          break;
        }
        const StepOut& pa = live(s.premise_a);
        const StepOut& pb = live(s.premise_b);
        if (!pa.clause.contains(Lit::pos(s.pivot))) {
          outs[s.id] = pa;  // pivot vanished; premise already subsumes the resolvent
          break;
        }
        if (!pb.clause.contains(Lit::neg(s.pivot))) {
          outs[s.id] = pb;
          break;
        }
        Clause derived = resolve_clauses(pa.clause, pb.clause, s.pivot);
        ProofStep ns;
        ns.kind = StepKind::Resolve;
        ns.premise_a = pa.new_id;
        ns.premise_b = pb.new_id;
        ns.pivot = s.pivot;
        outs[s.id] = emit(std::move(ns), std::move(derived));
        break;
      }
    }
  }

  if (proof.is_refutation()) {
    if (proof.steps.empty()) throw RestrictionError("empty proof");
    // The empty clause is never satisfied by a restriction.
    const StepOut& sink = live(proof.steps.back().id);
    while (!out.steps.empty() && out.steps.back().id > sink.new_id) out.steps.pop_back();
    return out;
  }

  for (const Clause& t : proof.targets) {
    auto rt = restrict_clause(t, a);
    if (!rt) throw RestrictionError("restriction trivializes a target: " + to_string(t));
    out.targets.push_back(std::move(*rt));
  }
  // Rebuild any target that now comes out strictly stronger than required.
  for (const Clause& t : out.targets) {
    bool derived = false;
    for (const ProofStep& s : out.steps) {
      const Clause& c = s.kind == StepKind::Input
          ? rf.formula.clauses[static_cast<std::size_t>(s.input_index - 1)]
          : s.clause;
      if (c == t) { derived = true; break; }
    }
    if (derived) continue;
    // Find a surviving step whose clause is a subset of t and weaken it up.
    const ProofStep* best = nullptr;
    const Clause* best_clause = nullptr;
    for (const ProofStep& s : out.steps) {
      const Clause& c = s.kind == StepKind::Input
          ? rf.formula.clauses[static_cast<std::size_t>(s.input_index - 1)]
          : s.clause;
      bool subset = std::includes(t.lits().begin(), t.lits().end(), c.lits().begin(), c.lits().end());
      if (subset && (!best_clause || c.size() > best_clause->size())) {
        best = &s;
        best_clause = &c;
      }
    }
    if (!best) throw RestrictionError("restricted derivation no longer covers target " + to_string(t));
    int prev = best->id;
    Clause cur = *best_clause;
    for (Lit l : t.lits()) {
      if (cur.contains(l)) continue;
      std::vector<Lit> lits(cur.lits().begin(), cur.lits().end());
      lits.push_back(l);
      Clause widened(std::move(lits));
      ProofStep ns;
      ns.id = ++next_id;
      ns.kind = StepKind::Weaken;
      ns.premise_a = prev;
      ns.added = l;
      ns.clause = widened;
      out.steps.push_back(std::move(ns));
      prev = next_id;
      cur = std::move(widened);
    }
  }
  return out;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(const std::string& tok, int line_no, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

// Reads "<lit>... 0" from toks[from..]; requires the terminator to be the
// final token of the line.
Clause read_clause(const std::vector<std::string>& toks, std::size_t from, int line_no) {
  std::vector<Lit> lits;
  for (std::size_t i = from; i < toks.size(); ++i) {
    int code = to_int(toks[i], line_no, "literal");
    if (code == 0) {
      if (i + 1 != toks.size()) throw ParseError(line_no, "tokens after clause terminator");
      return Clause(std::move(lits));
    }
    lits.push_back(Lit(code));
  }
  throw ParseError(line_no, "clause not 0-terminated");
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof proof;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::size_t declared_steps = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") {
      proof.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 3 && toks.size() != 5)
        throw ParseError(line_no, "malformed header, expected 'p proof <nsteps> [<mode> <k>]'");
      if (toks[1] != "proof") throw ParseError(line_no, "expected 'p proof' header");
      declared_steps = static_cast<std::size_t>(to_int(toks[2], line_no, "step count"));
      if (toks.size() == 5) {
        auto m = mode_from_string(toks[3]);
        if (!m) throw ParseError(line_no, "unknown mode '" + toks[3] + "'");
        proof.mode = *m;
        proof.k = to_int(toks[4], line_no, "parameter k");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "step data before 'p proof' header");
    if (toks[0] == "t") {
      proof.targets.push_back(read_clause(toks, 1, line_no));
      continue;
    }

    ProofStep s;
    s.id = to_int(toks[0], line_no, "step id");
    if (s.id <= 0) throw ParseError(line_no, "step id must be positive");
    if (toks.size() < 2) throw ParseError(line_no, "missing step kind");
    const std::string& kind = toks[1];
    if (kind == "I") {
      if (toks.size() != 3) throw ParseError(line_no, "input step takes one clause index");
      s.kind = StepKind::Input;
      s.input_index = to_int(toks[2], line_no, "clause index");
    } else if (kind == "A") {
      s.kind = StepKind::ParamAxiom;
      s.clause = read_clause(toks, 2, line_no);
    } else if (kind == "R") {
      if (toks.size() < 6) throw ParseError(line_no, "resolve step too short");
      s.kind = StepKind::Resolve;
      s.premise_a = to_int(toks[2], line_no, "premise id");
      s.premise_b = to_int(toks[3], line_no, "premise id");
      s.pivot = to_int(toks[4], line_no, "pivot variable");
      if (s.pivot <= 0) throw ParseError(line_no, "pivot variable must be positive");
      s.clause = read_clause(toks, 5, line_no);
    } else if (kind == "W") {
      if (toks.size() < 5) throw ParseError(line_no, "weaken step too short");
      s.kind = StepKind::Weaken;
      s.premise_a = to_int(toks[2], line_no, "premise id");
      int added = to_int(toks[3], line_no, "added literal");
      if (added == 0) throw ParseError(line_no, "added literal must be nonzero");
      s.added = Lit(added);
      s.clause = read_clause(toks, 4, line_no);
    } else {
      throw ParseError(line_no, "unknown step kind '" + kind + "'");
    }
    proof.steps.push_back(std::move(s));
  }
  if (!have_header) throw ParseError(line_no, "missing 'p proof' header");
  if (proof.steps.size() != declared_steps)
    throw ParseError(line_no, "step count does not match header");
  return proof;
}

std::string emit_proof(const Proof& proof) {
  std::ostringstream out;
  for (const std::string& c : proof.comments) out << "c " << c << "\n";
  out << "p proof " << proof.steps.size() << " " << to_string(proof.mode) << " " << proof.k
      << "\n";
  for (const ProofStep& s : proof.steps) {
    out << s.id << " ";
    switch (s.kind) {
      case StepKind::Input:
        out << "I " << s.input_index;
        break;
      case StepKind::ParamAxiom:
        out << "A " << to_string(s.clause);
        break;
      case StepKind::Resolve:
        out << "R " << s.premise_a << " " << s.premise_b << " " << s.pivot << " "
            << to_string(s.clause);
        break;
      case StepKind::Weaken:
        out << "W " << s.premise_a << " " << s.added.code() << " " << to_string(s.clause);
        break;
    }
    out << "\n";
  }
  for (const Clause& t : proof.targets) out << "t " << to_string(t) << "\n";
  return out.str();
}

}  // namespace wres
