#include <benchmark/benchmark.h>

#include "wres/families.hpp"
#include "wres/prover.hpp"

// Proof size stays flat as the row width grows; only generation cost moves.
static void BM_Theta3Prove(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto f = wres::gen_theta3(m, 2);
  wres::ParamInstance inst{f, 2, wres::Mode::W1};
  for (auto _ : state) {
    auto r = wres::prove(inst, wres::Strategy::Theta3);
    benchmark::DoNotOptimize(r.check_result.size);
  }
}
BENCHMARK(BM_Theta3Prove)->Arg(4)->Arg(16)->Arg(64);

static void BM_PositiveBranching(benchmark::State& state) {
  auto f = wres::gen_pnk(2, 1);
  wres::ParamInstance inst{f, static_cast<int>(state.range(0)), wres::Mode::W1};
  for (auto _ : state) {
    auto r = wres::prove(inst, wres::Strategy::PositiveBranching);
    benchmark::DoNotOptimize(r.dt_leaves);
  }
}
BENCHMARK(BM_PositiveBranching)->Arg(1)->Arg(2)->Arg(3);
