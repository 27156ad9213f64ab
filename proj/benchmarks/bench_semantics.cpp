#include <benchmark/benchmark.h>

#include "wres/families.hpp"
#include "wres/semantics.hpp"

static void BM_IsUnsatPhp(benchmark::State& state) {
  auto f = wres::gen_php(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = wres::is_unsat(f);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(BM_IsUnsatPhp)->Arg(3)->Arg(4);

static void BM_NecessityTheta(benchmark::State& state) {
  auto f = wres::gen_theta(3, 2);
  auto gamma = wres::gamma_for_theta(3, 2);
  wres::AxiomOracle oracle(f.num_vars, 2, wres::Mode::W2);
  for (auto _ : state) {
    auto rep = wres::verify_necessity(f, gamma, &oracle);
    benchmark::DoNotOptimize(rep.all_necessary);
  }
}
BENCHMARK(BM_NecessityTheta);
