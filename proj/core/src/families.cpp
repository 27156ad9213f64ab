#include "wres/families.hpp"

#include <string>

namespace wres {

namespace {

std::string idx2(std::string_view base, int a, int b) {
  return std::string(base) + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
}

}  // namespace

CnfFormula gen_theta(int m, int k) {
  if (m < 1) throw InvalidParameterError("theta requires m >= 1");
  if (k < 0) throw InvalidParameterError("theta requires k >= 0");
  CnfFormula f;
  f.num_vars = m * (k + 1);
  for (int i = 1; i <= k + 1; ++i)
    for (int j = 1; j <= m; ++j) f.set_name((i - 1) * m + j, idx2("v", j, i));
  for (int i = 1; i <= k + 1; ++i) {
    std::vector<Lit> lits;
    for (int j = 1; j <= m; ++j) lits.push_back(Lit::pos((i - 1) * m + j));
    f.add_clause(Clause(std::move(lits)));
  }
  f.family = "theta m=" + std::to_string(m) + " k=" + std::to_string(k);
  f.param_k = k;
  f.param_mode = Mode::W2;
  return f;
}

CnfFormula to_3cnf(const CnfFormula& f) {
  CnfFormula out;
  out.num_vars = f.num_vars;
  out.var_names = f.var_names;
  out.param_k = f.param_k;

  struct ChainVar { int id; int src_clause; int pos; };
  std::vector<ChainVar> fresh;

  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const Clause& c = f.clauses[ci];
    if (c.size() <= 3) continue;
    int need = static_cast<int>(c.size()) - 3;
    for (int j = 1; j <= need; ++j)
      fresh.push_back({++out.num_vars, static_cast<int>(ci) + 1, j});
  }
  for (const ChainVar& z : fresh)
    out.set_name(z.id, idx2("z", z.pos, z.src_clause));

  std::size_t next_fresh = 0;
  for (const Clause& c : f.clauses) {
    if (c.size() <= 3) {
      out.add_clause(c);
      continue;
    }
    auto lits = c.lits();
    int m = static_cast<int>(lits.size());
    std::vector<int> z(static_cast<std::size_t>(m - 3));
    for (int j = 0; j < m - 3; ++j) z[static_cast<std::size_t>(j)] = fresh[next_fresh++].id;

    out.add_clause(Clause({lits[0], lits[1], Lit::neg(z[0])}));
    for (int j = 1; j < m - 3; ++j)
      out.add_clause(Clause(
          {Lit::pos(z[static_cast<std::size_t>(j - 1)]), lits[static_cast<std::size_t>(j + 1)],
           Lit::neg(z[static_cast<std::size_t>(j)])}));
    out.add_clause(Clause({Lit::pos(z[static_cast<std::size_t>(m - 4)]),
                           lits[static_cast<std::size_t>(m - 2)],
                           lits[static_cast<std::size_t>(m - 1)]}));
  }
  return out;
}

CnfFormula gen_theta3(int m, int k) {
  CnfFormula f = to_3cnf(gen_theta(m, k));
  f.family = "theta3 m=" + std::to_string(m) + " k=" + std::to_string(k);
  f.param_k = k;
  f.param_mode = Mode::W1;
  return f;
}

CnfFormula gen_psi(int n, std::optional<int> k) {
  if (n < 2 || n % 2 != 0) throw InvalidParameterError("psi requires even n >= 2");
  CnfFormula f;
  f.num_vars = n;
  for (int i = 1; i <= n; ++i) f.set_name(i, "v[" + std::to_string(i) + "]");
  for (int i = 1; i <= n; i += 2) {
    f.add_clause(Clause({Lit::pos(i), Lit::neg(i + 1)}));
    f.add_clause(Clause({Lit::pos(i + 1), Lit::neg(i)}));
  }
  f.family = "psi n=" + std::to_string(n);
  f.param_mode = Mode::W1;
  if (k) f.param_k = *k;
  return f;
}

CnfFormula gen_php(int n) {
  if (n < 1) throw InvalidParameterError("php requires n >= 1");
  CnfFormula f;
  f.num_vars = (n + 1) * n;
  auto p = [n](int i, int j) { return (i - 1) * n + j; };
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n; ++j) f.set_name(p(i, j), idx2("p", i, j));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n + 1; ++i)
      for (int l = i + 1; l <= n + 1; ++l)
        f.add_clause(Clause({Lit::neg(p(i, j)), Lit::neg(p(l, j))}));
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<Lit> lits;
    for (int j = 1; j <= n; ++j) lits.push_back(Lit::pos(p(i, j)));
    f.add_clause(Clause(std::move(lits)));
  }
  f.family = "php n=" + std::to_string(n);
  return f;
}

CnfFormula gen_pnk(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidParameterError("pnk requires n >= 2 and 1 <= k <= n-1");
  CnfFormula f;
  const int c1 = 1, c2 = 2;
  f.num_vars = 2 + n * k + n * (n - k);
  f.set_name(c1, "c[1]");
  f.set_name(c2, "c[2]");
  auto p = [n, k](int i, int j) { (void)n; return 2 + (i - 1) * k + j; };
  auto q = [n, k](int i, int j) { return 2 + n * k + (i - 1) * (n - k) + j; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) f.set_name(p(i, j), idx2("p", i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - k; ++j) f.set_name(q(i, j), idx2("q", i, j));

  // ~c1 <-> c2 under the two-clause reading of the biconditional
  f.add_clause(Clause({Lit::neg(c1), Lit::neg(c2)}));
  f.add_clause(Clause({Lit::pos(c1), Lit::pos(c2)}));
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= n; ++i)
      for (int l = i + 1; l <= n; ++l)
        f.add_clause(Clause({Lit::neg(c1), Lit::neg(p(i, j)), Lit::neg(p(l, j))}));
  for (int i = 1; i <= n; ++i) {
    std::vector<Lit> lits{Lit::neg(c1)};
    for (int j = 1; j <= k; ++j) lits.push_back(Lit::pos(p(i, j)));
    f.add_clause(Clause(std::move(lits)));
  }
  for (int j = 1; j <= n - k; ++j)
    for (int i = 1; i <= n; ++i)
      for (int l = i + 1; l <= n; ++l)
        f.add_clause(Clause({Lit::neg(c2), Lit::neg(q(i, j)), Lit::neg(q(l, j))}));
  for (int i = 1; i <= n; ++i) {
    std::vector<Lit> lits{Lit::neg(c2)};
    for (int j = 1; j <= n - k; ++j) lits.push_back(Lit::pos(q(i, j)));
    f.add_clause(Clause(std::move(lits)));
  }
  f.family = "pnk n=" + std::to_string(n) + " k=" + std::to_string(k);
  f.param_k = k;
  return f;
}

CnfFormula embed_w1(const CnfFormula& f, int k) {
  const int n = f.num_vars;
  if (k < 0 || k > n) throw InvalidParameterError("embed-w1 requires 0 <= k <= n");
  CnfFormula out;
  out.num_vars = n + n * k + n * (n - k);
  out.var_names = f.var_names;
  out.var_names.resize(static_cast<std::size_t>(out.num_vars) + 1);
  auto r = [n, k](int i, int j) { (void)k; return n + (i - 1) * k + j; };
  auto s = [n, k](int i, int j) { return n + n * k + (i - 1) * (n - k) + j; };
  for (int i = 1; i <= n; ++i) {
    std::string xi = "x" + std::to_string(i);
    for (int j = 1; j <= k; ++j) out.set_name(r(i, j), "r[" + xi + "][" + std::to_string(j) + "]");
    for (int j = 1; j <= n - k; ++j) out.set_name(s(i, j), "s[" + xi + "][" + std::to_string(j) + "]");
  }

  for (const Clause& c : f.clauses) out.add_clause(c);
  for (int i = 1; i <= n; ++i) {
    std::vector<Lit> lits{Lit::neg(i)};
    for (int j = 1; j <= k; ++j) lits.push_back(Lit::pos(r(i, j)));
    out.add_clause(Clause(std::move(lits)));
  }
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l) {
        if (l == i) continue;
        out.add_clause(Clause({Lit::neg(i), Lit::neg(r(i, j)), Lit::neg(r(l, j))}));
      }
  for (int i = 1; i <= n; ++i) {
    std::vector<Lit> lits{Lit::pos(i)};
    for (int j = 1; j <= n - k; ++j) lits.push_back(Lit::pos(s(i, j)));
    out.add_clause(Clause(std::move(lits)));
  }
  for (int j = 1; j <= n - k; ++j)
    for (int i = 1; i <= n; ++i)
      for (int l = 1; l <= n; ++l) {
        if (l == i) continue;
        out.add_clause(Clause({Lit::pos(i), Lit::neg(s(i, j)), Lit::neg(s(l, j))}));
      }
  out.family = "embed-w1 n=" + std::to_string(n) + " k=" + std::to_string(k);
  out.param_k = k;
  return out;
}

CnfFormula gen_psi_embedded(int n, int k) {
  CnfFormula f = embed_w1(gen_psi(n), k);
  f.family = "psi-embedded n=" + std::to_string(n) + " k=" + std::to_string(k);
  return f;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Theta: return "theta";
    case Family::Theta3: return "theta3";
    case Family::Psi: return "psi";
    case Family::Php: return "php";
    case Family::Pnk: return "pnk";
    case Family::EmbedW1: return "embed-w1";
    case Family::PsiEmbedded: return "psi-embedded";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "theta") return Family::Theta;
  if (s == "theta3") return Family::Theta3;
  if (s == "psi") return Family::Psi;
  if (s == "php") return Family::Php;
  if (s == "pnk") return Family::Pnk;
  if (s == "embed-w1") return Family::EmbedW1;
  if (s == "psi-embedded") return Family::PsiEmbedded;
  return std::nullopt;
}

namespace {

int require(const std::optional<int>& v, const char* name) {
  if (!v) throw InvalidParameterError(std::string("missing parameter ") + name);
  return *v;
}

}  // namespace

CnfFormula generate(const FamilySpec& spec, const CnfFormula* base) {
  switch (spec.family) {
    case Family::Theta:
      return gen_theta(require(spec.m, "m"), require(spec.k, "k"));
    case Family::Theta3:
      return gen_theta3(require(spec.m, "m"), require(spec.k, "k"));
    case Family::Psi:
      return gen_psi(require(spec.n, "n"), spec.k);
    case Family::Php:
      return gen_php(require(spec.n, "n"));
    case Family::Pnk:
      return gen_pnk(require(spec.n, "n"), require(spec.k, "k"));
    case Family::EmbedW1:
      if (!base) throw InvalidParameterError("embed-w1 requires a base formula");
      return embed_w1(*base, require(spec.k, "k"));
    case Family::PsiEmbedded:
      return gen_psi_embedded(require(spec.n, "n"), require(spec.k, "k"));
  }
  throw InvalidParameterError("unknown family");
}

}  // namespace wres
