#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wres/dimacs.hpp"
#include "wres/families.hpp"
#include "wres/prover.hpp"
#include "wres/reduction.hpp"
#include "wres/semantics.hpp"

namespace wres::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kBadInput = 3;

struct UsageError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write " + path);
  out << text;
}

std::string join_vars(const std::vector<int>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vars[i]);
  }
  return s.empty() ? "-" : s;
}

Budget make_budget(std::optional<std::uint64_t> flag) {
  Budget b = budget_from_env();
  if (flag) {
    b.total_assignments = *flag;
    b.combinations = *flag;
  }
  return b;
}

// Pulls "<key>=<value>" out of a family provenance comment.
std::optional<int> family_param(const CnfFormula& f, const std::string& key) {
  if (!f.family) return std::nullopt;
  std::istringstream in(*f.family);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind(key + "=", 0) == 0) {
      try {
        return std::stoi(tok.substr(key.size() + 1));
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

struct GenArgs {
  std::string family;
  std::optional<int> m, n, k;
  std::string in_path, out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  auto fam = family_from_string(a.family);
  if (!fam) throw UsageError("unknown family '" + a.family + "'");
  FamilySpec spec;
  spec.family = *fam;
  spec.m = a.m;
  spec.n = a.n;
  spec.k = a.k;

  CnfFormula base;
  const CnfFormula* base_ptr = nullptr;
  if (*fam == Family::EmbedW1) {
    if (a.in_path.empty()) throw UsageError("embed-w1 requires --in");
    base = parse_dimacs(slurp(a.in_path));
    base_ptr = &base;
  } else if (!a.in_path.empty()) {
    throw UsageError("--in is only meaningful for embed-w1");
  }

  CnfFormula f = generate(spec, base_ptr);
  std::string text = emit_dimacs(f);
  std::string summary = "RESULT gen family=" + std::string(to_string(*fam)) +
                        " vars=" + std::to_string(f.num_vars) +
                        " clauses=" + std::to_string(f.clauses.size());
  if (!a.out_path.empty()) {
    spill(a.out_path, text);
    out << summary << " out=" << a.out_path << "\n";
    out << "vars=" << f.num_vars << " clauses=" << f.clauses.size() << "\n";
  } else {
    err << summary << "\n";
    out << text;
  }
  return kOk;
}

struct CheckArgs {
  std::string cnf_path, proof_path;
  std::optional<std::string> mode;
  std::optional<int> k;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream&) {
  CnfFormula f = parse_dimacs(slurp(a.cnf_path));
  Proof proof = parse_proof(slurp(a.proof_path));

  if (a.mode) {
    auto m = mode_from_string(*a.mode);
    if (!m) throw UsageError("unknown mode '" + *a.mode + "'");
    if (*m != Mode::Plain && !a.k)
      throw UsageError("--mode " + *a.mode + " requires --k");
    proof.mode = *m;
    proof.k = a.k.value_or(0);
  } else if (a.k) {
    proof.k = *a.k;
  }

  std::optional<AxiomOracle> oracle;
  if (proof.mode != Mode::Plain) oracle.emplace(f.num_vars, proof.k, proof.mode);
  try {
    CheckResult r = check(proof, f, oracle ? &*oracle : nullptr);
    out << "RESULT check status=ok size=" << r.size << " total=" << r.total_steps
        << " leaves=" << r.leaves << "\n";
    out << "OK size=" << r.size << "\n";
    return kOk;
  } catch (const CheckFailure& e) {
    out << "RESULT check status=fail step=" << e.step_id << " reason=" << to_string(e.reason)
        << "\n";
    out << "FAIL step=" << e.step_id << " reason=" << to_string(e.reason) << "\n";
    return kRefuted;
  }
}

struct ProveArgs {
  std::string cnf_path, out_path;
  std::optional<std::string> mode, strategy;
  std::optional<int> k;
};

int cmd_prove(const ProveArgs& a, std::ostream& out, std::ostream& err) {
  CnfFormula f = parse_dimacs(slurp(a.cnf_path));
  ParamInstance inst;
  if (a.mode) {
    auto m = mode_from_string(*a.mode);
    if (!m) throw UsageError("unknown mode '" + *a.mode + "'");
    inst.mode = *m;
  } else if (f.param_mode) {
    inst.mode = *f.param_mode;
  } else {
    throw UsageError("--mode required (formula carries no mode comment)");
  }
  if (a.k) inst.k = *a.k;
  else if (f.param_k) inst.k = *f.param_k;
  else if (inst.mode != Mode::Plain)
    throw UsageError("--k required (formula carries no parameter comment)");

  Strategy strategy = Strategy::PositiveBranching;
  if (a.strategy) {
    auto s = strategy_from_string(*a.strategy);
    if (!s) throw UsageError("unknown strategy '" + *a.strategy + "'");
    strategy = *s;
  }
  inst.formula = std::move(f);

  ProveResult r = prove(inst, strategy);
  if (r.counterexample) {
    out << "RESULT prove status=counterexample weight=" << r.counterexample->weight()
        << " witness-true=" << join_vars(r.counterexample->true_vars()) << "\n";
    out << "counterexample of weight " << r.counterexample->weight() << ": true vars "
        << join_vars(r.counterexample->true_vars()) << "\n";
    return kRefuted;
  }
  std::string text = emit_proof(*r.proof);
  out << "RESULT prove status=refutation leaves=" << r.check_result.leaves
      << " size=" << r.check_result.size << " total=" << r.check_result.total_steps
      << " dt-nodes=" << r.dt_nodes << " dt-leaves=" << r.dt_leaves << "\n";
  out << "refutation: leaves=" << r.check_result.leaves << " size=" << r.check_result.size
      << "\n";
  if (!a.out_path.empty()) spill(a.out_path, text);
  else err << text;
  return kOk;
}

struct VerifyArgs {
  std::string kind, cnf_path, gamma, json_path;
  std::optional<std::string> mode;
  std::optional<int> k, m;
  std::optional<std::uint64_t> budget;
  int jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&);

struct ReduceArgs {
  int n = 0, k = 0;
  std::string out_path;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  Reduction red = derive_reduction(a.n, a.k);
  int max_per_target = 0, total_res = 0;
  for (int r : red.resolutions_per_target) {
    max_per_target = std::max(max_per_target, r);
    total_res += r;
  }
  std::string text = emit_proof(red.derivation);
  out << "RESULT reduce n=" << a.n << " k=" << a.k << " targets=" << red.derivation.targets.size()
      << " steps=" << red.derivation.steps.size() << " resolutions=" << total_res
      << " max-per-target=" << max_per_target << "\n";
  out << "derivation: " << red.derivation.targets.size() << " targets, "
      << red.derivation.steps.size() << " steps, at most " << max_per_target
      << " resolution(s) per target\n";
  if (!a.out_path.empty()) spill(a.out_path, text);
  else err << text;
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
  CnfFormula f = parse_dimacs(slurp(a.cnf_path));
  Budget budget = make_budget(a.budget);

  auto need_k = [&]() -> int {
    if (a.k) return *a.k;
    if (f.param_k) return *f.param_k;
    throw UsageError("--k required (formula carries no parameter comment)");
  };

  if (a.kind == "wpcon" || a.kind == "pcon") {
    int k = need_k();
    SearchResult r = a.kind == "wpcon" ? is_wpcon(f, k, budget) : is_pcon(f, k, budget);
    out << "RESULT verify kind=" << a.kind << " k=" << k << " holds=" << (r.holds ? "true" : "false");
    if (r.witness) out << " witness-true=" << join_vars(r.witness->true_vars());
    out << "\n";
    if (r.holds) {
      out << "holds: no satisfying assignment of weight " << (a.kind == "wpcon" ? "= " : "<= ")
          << k << "\n";
      return kOk;
    }
    out << "refuted: weight-" << r.witness->weight() << " satisfying assignment, true vars "
        << join_vars(r.witness->true_vars()) << "\n";
    return kRefuted;
  }

  if (a.kind == "unsat") {
    SearchResult r = is_unsat(f, budget, a.jobs);
    out << "RESULT verify kind=unsat holds=" << (r.holds ? "true" : "false");
    if (r.witness) out << " witness-true=" << join_vars(r.witness->true_vars());
    out << "\n";
    if (r.holds) {
      out << "holds: unsatisfiable\n";
      return kOk;
    }
    out << "refuted: satisfiable, true vars " << join_vars(r.witness->true_vars()) << "\n";
    return kRefuted;
  }

  if (a.kind == "necessity") {
    if (a.gamma.empty()) throw UsageError("necessity requires --gamma theta|psi");
    int k = need_k();
    std::vector<Clause> gamma;
    Mode context_mode;
    if (a.gamma == "theta") {
      std::optional<int> m = a.m;
      if (!m) m = family_param(f, "m");
      if (!m) throw UsageError("cannot determine m: pass --m or use a generated theta file");
      gamma = gamma_for_theta(*m, k);
      context_mode = Mode::W2;
    } else if (a.gamma == "psi") {
      gamma = gamma_for_psi(f.num_vars, k);
      context_mode = Mode::W1;
    } else {
      throw UsageError("unknown gamma family '" + a.gamma + "'");
    }
    if (a.mode) {
      auto m = mode_from_string(*a.mode);
      if (!m || *m == Mode::Plain) throw UsageError("context mode must be w1 or w2");
      context_mode = *m;
    }
    AxiomOracle oracle(f.num_vars, k, context_mode);
    NecessityReport rep = verify_necessity(f, gamma, &oracle, budget, a.jobs);

    std::size_t necessary = 0;
    for (const auto& rec : rep.records)
      if (rec.satisfiable) ++necessary;
    out << "RESULT verify kind=necessity gamma=" << gamma.size() << " necessary=" << necessary
        << " verdict=" << (rep.all_necessary ? "all-necessary" : "not-all-necessary") << "\n";
    out << necessary << "/" << gamma.size() << " necessary\n";
    for (const auto& rec : rep.records) {
      out << "gamma " << rec.index + 1 << " " << to_string(gamma[rec.index])
          << (rec.satisfiable ? " removable-satisfiable" : " removable-unsatisfiable");
      if (rec.witness) out << " witness-true=" << join_vars(rec.witness->true_vars());
      out << "\n";
    }
    if (!a.json_path.empty()) {
      nlohmann::json js;
      js["gamma"] = gamma.size();
      js["all_necessary"] = rep.all_necessary;
      js["records"] = nlohmann::json::array();
      for (const auto& rec : rep.records) {
        nlohmann::json record;
        record["index"] = rec.index + 1;
        record["clause"] = to_string(gamma[rec.index]);
        record["satisfiable"] = rec.satisfiable;
        record["witness_true"] =
            rec.witness ? rec.witness->true_vars() : std::vector<int>{};
        js["records"].push_back(std::move(record));
      }
      spill(a.json_path, js.dump(2) + "\n");
    }
    return rep.all_necessary ? kOk : kRefuted;
  }

  throw UsageError("unknown verify kind '" + a.kind + "'");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toolkit for parameterized Resolution: formula families, proof checking,\n"
               "decision-tree proving, brute-force verification, and the pairing reduction"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate a formula family as DIMACS");
  cgen->add_option("family", gen.family, "theta|theta3|psi|php|pnk|embed-w1|psi-embedded")
      ->required();
  int gm = 0, gn = 0, gk = 0;
  auto* gmo = cgen->add_option("--m", gm, "width parameter m");
  auto* gno = cgen->add_option("--n", gn, "size parameter n");
  auto* gko = cgen->add_option("--k", gk, "parameter k");
  cgen->add_option("--in", gen.in_path, "base DIMACS file (embed-w1)");
  cgen->add_option("--out", gen.out_path, "output file (default stdout)");

  CheckArgs chk;
  auto* cchk = app.add_subcommand("check", "check a proof trace against a DIMACS file");
  cchk->add_option("--cnf", chk.cnf_path, "DIMACS file")->required();
  cchk->add_option("--proof", chk.proof_path, "proof trace file")->required();
  std::string chk_mode;
  int chk_k = 0;
  auto* chk_mode_o = cchk->add_option("--mode", chk_mode, "plain|w1|w2 (default: proof header)");
  auto* chk_k_o = cchk->add_option("--k", chk_k, "parameter k");

  ProveArgs prv;
  auto* cprv = app.add_subcommand("prove", "search a tree refutation or a witness");
  cprv->add_option("--cnf", prv.cnf_path, "DIMACS file")->required();
  std::string prv_mode, prv_strategy;
  int prv_k = 0;
  auto* prv_mode_o = cprv->add_option("--mode", prv_mode, "plain|w1|w2");
  auto* prv_k_o = cprv->add_option("--k", prv_k, "parameter k");
  auto* prv_strat_o =
      cprv->add_option("--strategy", prv_strategy, "positive|theta3|enumeration (default positive)");
  cprv->add_option("--out", prv.out_path, "proof output file (default stderr)");

  VerifyArgs ver;
  auto* cver = app.add_subcommand("verify", "brute-force semantic verification");
  cver->add_option("kind", ver.kind, "wpcon|pcon|unsat|necessity")->required();
  cver->add_option("--cnf", ver.cnf_path, "DIMACS file")->required();
  int ver_k = 0, ver_m = 0;
  auto* ver_k_o = cver->add_option("--k", ver_k, "parameter k");
  auto* ver_m_o = cver->add_option("--m", ver_m, "theta width m (necessity)");
  cver->add_option("--gamma", ver.gamma, "gamma family: theta|psi (necessity)");
  std::string ver_mode;
  auto* ver_mode_o = cver->add_option("--mode", ver_mode, "context oracle mode override");
  std::uint64_t ver_budget = 0;
  auto* ver_budget_o = cver->add_option("--budget", ver_budget, "enumeration budget");
  cver->add_option("--jobs", ver.jobs, "worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  cver->add_option("--json", ver.json_path, "write a machine-readable report");

  ReduceArgs red;
  auto* cred = app.add_subcommand("reduce", "emit the pairing-to-pigeonhole derivation");
  cred->add_option("--n", red.n, "size parameter n")->required();
  cred->add_option("--k", red.k, "parameter k")->required();
  cred->add_option("--out", red.out_path, "derivation output file (default stderr)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (cgen->parsed()) {
      if (*gmo) gen.m = gm;
      if (*gno) gen.n = gn;
      if (*gko) gen.k = gk;
      return cmd_gen(gen, out, err);
    }
    if (cchk->parsed()) {
      if (*chk_mode_o) chk.mode = chk_mode;
      if (*chk_k_o) chk.k = chk_k;
      return cmd_check(chk, out, err);
    }
    if (cprv->parsed()) {
      if (*prv_mode_o) prv.mode = prv_mode;
      if (*prv_k_o) prv.k = prv_k;
      if (*prv_strat_o) prv.strategy = prv_strategy;
      return cmd_prove(prv, out, err);
    }
    if (cver->parsed()) {
      if (*ver_k_o) ver.k = ver_k;
      if (*ver_m_o) ver.m = ver_m;
      if (*ver_mode_o) ver.mode = ver_mode;
      if (*ver_budget_o) ver.budget = ver_budget;
      return cmd_verify(ver, out, err);
    }
    if (cred->parsed()) return cmd_reduce(red, out, err);
    err << "no subcommand\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << " (raise with --budget or WRES_BUDGET)\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRefuted;
  }
}

}  // namespace wres::cli
