#include "wres/axioms.hpp"

#include <numeric>

namespace wres {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i, exact at every stage
    std::uint64_t num = n - k + i;
    std::uint64_t g = std::gcd(result, i);
    std::uint64_t r = result / g;
    std::uint64_t d = i / g;
    std::uint64_t q = num / d;  // d divides num once g is factored out
    if (r != 0 && q > UINT64_MAX / r)
      throw Error("binomial coefficient overflows 64-bit arithmetic");
    result = r * q;
  }
  return result;
}

AxiomOracle::AxiomOracle(int num_vars, int k, Mode mode)
    : n_(num_vars), k_(k), mode_(mode) {
  if (mode == Mode::Plain)
    throw InvalidParameterError("axiom oracle requires mode w1 or w2");
  if (num_vars < 0 || k < 0)
    throw InvalidParameterError("axiom oracle requires n >= 0 and k >= 0");
}

bool AxiomOracle::is_axiom(const Clause& c) const {
  if (c.empty() || c.max_var() > n_) return false;
  bool all_neg = true, all_pos = true;
  for (Lit l : c.lits()) {
    if (l.positive()) all_neg = false; else all_pos = false;
  }
  // Canonical form already has distinct (var, phase) pairs, so a single-phase
  // clause has distinct variables.
  int width = static_cast<int>(c.size());
  if (all_neg && width == negative_width()) return true;
  if (mode_ == Mode::W1 && all_pos && width == positive_width()) return true;
  return false;
}

std::uint64_t AxiomOracle::count_axioms() const {
  std::uint64_t total = 0;
  if (negative_width() <= n_)
    total += binomial(static_cast<std::uint64_t>(n_),
                      static_cast<std::uint64_t>(negative_width()));
  if (mode_ == Mode::W1 && positive_width() >= 1 && positive_width() <= n_)
    total += binomial(static_cast<std::uint64_t>(n_),
                      static_cast<std::uint64_t>(positive_width()));
  return total;
}

std::optional<Clause> AxiomOracle::violated_axiom(const Assignment& a) const {
  std::vector<Lit> lits;
  for (int v = 1; v <= n_ && static_cast<int>(lits.size()) < negative_width(); ++v)
    if (a.is_true(v)) lits.push_back(Lit::neg(v));
  if (static_cast<int>(lits.size()) == negative_width())
    return Clause(std::move(lits));
  if (mode_ == Mode::W1 && positive_width() >= 1) {
    lits.clear();
    for (int v = 1; v <= n_ && static_cast<int>(lits.size()) < positive_width(); ++v)
      if (a.is_false(v)) lits.push_back(Lit::pos(v));
    if (static_cast<int>(lits.size()) == positive_width())
      return Clause(std::move(lits));
  }
  return std::nullopt;
}

AxiomOracle::Enumerator::Enumerator(const AxiomOracle& oracle)
    : o_(oracle), negative_phase_(true), fresh_(true) {}

// Lexicographic successor of the ascending index tuple idx_ within [1, n].
bool AxiomOracle::Enumerator::advance(int width) {
  if (fresh_) {
    fresh_ = false;
    if (width < 1 || width > o_.n_) return false;
    idx_.resize(static_cast<std::size_t>(width));
    std::iota(idx_.begin(), idx_.end(), 1);
    return true;
  }
  int w = width;
  for (int i = w - 1; i >= 0; --i) {
    if (idx_[static_cast<std::size_t>(i)] < o_.n_ - (w - 1 - i)) {
      ++idx_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < w; ++j)
        idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::optional<Clause> AxiomOracle::Enumerator::next() {
  while (true) {
    int width = negative_phase_ ? o_.negative_width() : o_.positive_width();
    if (advance(width)) {
      std::vector<Lit> lits;
      lits.reserve(idx_.size());
      for (int v : idx_)
        lits.push_back(negative_phase_ ? Lit::neg(v) : Lit::pos(v));
      return Clause(std::move(lits));
    }
    if (negative_phase_ && o_.mode_ == Mode::W1) {
      negative_phase_ = false;
      fresh_ = true;
      idx_.clear();
      continue;
    }
    return std::nullopt;
  }
}

std::vector<Clause> AxiomOracle::enumerate_axioms() const {
  std::vector<Clause> out;
  auto e = enumerate();
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace wres
