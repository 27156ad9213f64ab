#include "wres/semantics.hpp"

#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace wres {

namespace {

// Bitmask evaluation for formulas on at most 63 variables: bit v-1 of an
// assignment word is the value of variable v.
struct MaskFormula {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> clauses;  // pos, neg
  std::uint64_t full = 0;
  int n = 0;
};

MaskFormula build_masks(const CnfFormula& f) {
  if (f.num_vars > 63) throw BudgetExceededError("formula too wide for exhaustive enumeration");
  MaskFormula m;
  m.n = f.num_vars;
  m.full = f.num_vars == 0 ? 0 : (~0ull >> (64 - f.num_vars));
  m.clauses.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    std::uint64_t pos = 0, neg = 0;
    for (Lit l : c.lits()) {
      std::uint64_t bit = 1ull << (l.var() - 1);
      if (l.positive()) pos |= bit; else neg |= bit;
    }
    m.clauses.emplace_back(pos, neg);
  }
  return m;
}

bool mask_sat(const MaskFormula& m, std::uint64_t a) {
  for (auto [pos, neg] : m.clauses)
    if ((pos & a) == 0 && (neg & ~a & m.full) == 0) return false;
  return true;
}

Assignment assignment_from_mask(std::uint64_t a, int n) {
  Assignment out(n);
  for (int v = 1; v <= n; ++v) out.set(v, (a >> (v - 1)) & 1);
  return out;
}

std::uint64_t mask_from_vars(const std::vector<int>& vars) {
  std::uint64_t a = 0;
  for (int v : vars) a |= 1ull << (v - 1);
  return a;
}

// Ascending w-subsets of [1..n] in lexicographic order; fn returns true to
// stop early.
template <class Fn>
bool for_each_subset(int n, int w, Fn&& fn) {
  if (w < 0 || w > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(w));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (fn(static_cast<const std::vector<int>&>(idx))) return true;
    int i = w - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (w - 1 - i)) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::uint64_t checked_binomial(int n, int w) {
  try {
    return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(w));
  } catch (const Error&) {
    throw BudgetExceededError("combination count overflows the enumeration budget");
  }
}

SearchResult search_weights(const CnfFormula& f, int w_lo, int w_hi, const Budget& b) {
  std::uint64_t total = 0;
  for (int w = w_lo; w <= w_hi; ++w) {
    std::uint64_t c = checked_binomial(f.num_vars, w);
    if (c > b.combinations - std::min(b.combinations, total))
      throw BudgetExceededError("weight enumeration exceeds combination budget");
    total += c;
  }
  SearchResult res;
  res.holds = true;
  if (f.num_vars <= 63) {
    MaskFormula m = build_masks(f);
    for (int w = w_lo; w <= w_hi && res.holds; ++w) {
      for_each_subset(f.num_vars, w, [&](const std::vector<int>& vars) {
        std::uint64_t a = mask_from_vars(vars);
        if (mask_sat(m, a)) {
          res.holds = false;
          res.witness = assignment_from_mask(a, f.num_vars);
          return true;
        }
        return false;
      });
    }
    return res;
  }
  for (int w = w_lo; w <= w_hi && res.holds; ++w) {
    for_each_subset(f.num_vars, w, [&](const std::vector<int>& vars) {
      Assignment a(f.num_vars);
      for (int v = 1; v <= f.num_vars; ++v) a.set(v, false);
      for (int v : vars) a.set(v, true);
      if (satisfies(f, a)) {
        res.holds = false;
        res.witness = a;
        return true;
      }
      return false;
    });
  }
  return res;
}

}  // namespace

Budget budget_from_env() {
  Budget b;
  if (const char* env = std::getenv("WRES_BUDGET")) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(env, env + std::string_view(env).size(), v);
    if (ec == std::errc() && p == env + std::string_view(env).size() && v > 0) {
      b.total_assignments = v;
      b.combinations = v;
    }
  }
  return b;
}

SearchResult is_wpcon(const CnfFormula& f, int k, const Budget& b) {
  if (k < 0 || k > f.num_vars) return {true, std::nullopt};
  return search_weights(f, k, k, b);
}

SearchResult is_pcon(const CnfFormula& f, int k, const Budget& b) {
  if (k < 0) return {true, std::nullopt};
  return search_weights(f, 0, std::min(k, f.num_vars), b);
}

SearchResult is_unsat(const CnfFormula& f, const Budget& b, int jobs) {
  if (f.num_vars > 63 ||
      (f.num_vars > 0 && (1ull << f.num_vars) > b.total_assignments))
    throw BudgetExceededError("total enumeration exceeds assignment budget");
  MaskFormula m = build_masks(f);
  const std::uint64_t space = f.num_vars == 0 ? 1 : (1ull << f.num_vars);

  auto scan = [&m](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
    for (std::uint64_t a = lo; a < hi; ++a)
      if (mask_sat(m, a)) return a;
    return std::nullopt;
  };

  std::optional<std::uint64_t> found;
  if (jobs <= 1 || space < 4096) {
    found = scan(0, space);
  } else {
    // Prefix split: chunk w holds assignments [w*len, (w+1)*len); the witness
    // from the lowest nonempty chunk is the lexicographically first overall.
    std::size_t workers = static_cast<std::size_t>(jobs);
    std::vector<std::optional<std::uint64_t>> results(workers);
    std::vector<std::thread> threads;
    std::uint64_t len = (space + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::uint64_t lo = static_cast<std::uint64_t>(w) * len;
      std::uint64_t hi = std::min(space, lo + len);
      threads.emplace_back([&, w, lo, hi] { results[w] = lo < hi ? scan(lo, hi) : std::nullopt; });
    }
    for (auto& t : threads) t.join();
    for (auto& r : results)
      if (r) { found = r; break; }
  }
  if (!found) return {true, std::nullopt};
  return {false, assignment_from_mask(*found, f.num_vars)};
}

namespace {

struct GammaInfo {
  std::uint64_t pos = 0, neg = 0, vars = 0;
  bool all_neg = false, all_pos = false;
  int width = 0;
};

GammaInfo gamma_info(const Clause& c) {
  GammaInfo g;
  g.width = static_cast<int>(c.size());
  g.all_neg = true;
  g.all_pos = true;
  for (Lit l : c.lits()) {
    std::uint64_t bit = 1ull << (l.var() - 1);
    g.vars |= bit;
    if (l.positive()) { g.pos |= bit; g.all_neg = false; }
    else { g.neg |= bit; g.all_pos = false; }
  }
  if (c.empty()) { g.all_neg = g.all_pos = false; }
  return g;
}

}  // namespace

NecessityReport verify_necessity(const CnfFormula& f, const std::vector<Clause>& gamma,
                                 const AxiomOracle* context, const Budget& b, int jobs) {
  const int n = f.num_vars;
  if (n > 63 || (n > 0 && (1ull << n) > b.total_assignments))
    throw BudgetExceededError("necessity check exceeds assignment budget");
  if (context && context->num_vars() != n)
    throw InvalidParameterError("context oracle variable count must match formula");

  MaskFormula fm = build_masks(f);
  std::vector<GammaInfo> infos;
  infos.reserve(gamma.size());
  for (const Clause& c : gamma) {
    if (c.max_var() > n) throw InvalidParameterError("gamma clause beyond formula variables");
    infos.push_back(gamma_info(c));
  }

  const std::uint64_t space = n == 0 ? 1 : (1ull << n);
  const int neg_w = context ? context->k() + 1 : 0;
  const int pos_w = context ? n - context->k() + 1 : 0;

  auto check_one = [&](std::size_t i) -> NecessityRecord {
    NecessityRecord rec;
    rec.index = i;
    const GammaInfo& gi = infos[i];
    for (std::uint64_t a = 0; a < space; ++a) {
      if (!mask_sat(fm, a)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < infos.size() && ok; ++j) {
        if (j == i) continue;
        const GammaInfo& gj = infos[j];
        if ((gj.pos & a) == 0 && (gj.neg & ~a & fm.full) == 0) ok = false;
      }
      if (!ok) continue;
      if (context) {
        int t = std::popcount(a);
        if (t >= neg_w) {
          // exactly one negative axiom may be violated, and only gamma[i]
          ok = t == neg_w && gi.all_neg && gi.width == neg_w && gi.vars == a;
        }
        if (ok && context->mode() == Mode::W1 && pos_w >= 1) {
          int fc = n - t;
          if (fc >= pos_w)
            ok = fc == pos_w && gi.all_pos && gi.width == pos_w &&
                 gi.vars == (~a & fm.full);
        }
      }
      if (ok) {
        rec.satisfiable = true;
        rec.witness = assignment_from_mask(a, n);
        break;
      }
    }
    return rec;
  };

  NecessityReport report;
  report.records.resize(gamma.size());
  if (jobs <= 1 || gamma.size() <= 1) {
    for (std::size_t i = 0; i < gamma.size(); ++i) report.records[i] = check_one(i);
  } else {
    std::vector<std::thread> threads;
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), gamma.size());
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < gamma.size(); i = next.fetch_add(1))
          report.records[i] = check_one(i);
      });
    for (auto& t : threads) t.join();
  }
  report.all_necessary = !gamma.empty();
  for (const auto& rec : report.records)
    if (!rec.satisfiable) report.all_necessary = false;
  return report;
}

std::vector<Clause> gamma_for_theta(int m, int k) {
  if (m < 1 || k < 0) throw InvalidParameterError("gamma theta requires m >= 1, k >= 0");
  std::vector<Clause> out;
  std::vector<int> tuple(static_cast<std::size_t>(k) + 1, 1);
  while (true) {
    std::vector<Lit> lits;
    for (int i = 1; i <= k + 1; ++i)
      lits.push_back(Lit::neg((i - 1) * m + tuple[static_cast<std::size_t>(i - 1)]));
    out.push_back(Clause(std::move(lits)));
    int i = k;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == m) --i;
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= k; ++j) tuple[static_cast<std::size_t>(j)] = 1;
  }
  return out;
}

std::vector<Clause> gamma_for_psi(int n, int k) {
  if (n < 2 || n % 2 != 0) throw InvalidParameterError("gamma psi requires even n >= 2");
  if (k < 1 || k % 2 == 0) throw InvalidParameterError("gamma psi requires odd k >= 1");
  const int pairs = n / 2;
  const int pick = (k + 1) / 2;
  if (pick > pairs) throw InvalidParameterError("gamma psi requires (k+1)/2 <= n/2");
  std::vector<Clause> out;
  for_each_subset(pairs, pick, [&](const std::vector<int>& chosen) {
    std::vector<Lit> lits;
    for (int a : chosen) {
      lits.push_back(Lit::neg(2 * a - 1));
      lits.push_back(Lit::neg(2 * a));
    }
    out.push_back(Clause(std::move(lits)));
    return false;
  });
  return out;
}

}  // namespace wres
