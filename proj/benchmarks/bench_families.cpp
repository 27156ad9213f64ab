#include <benchmark/benchmark.h>

#include "wres/dimacs.hpp"
#include "wres/families.hpp"

static void BM_GenPhp(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto f = wres::gen_php(n);
    benchmark::DoNotOptimize(f.clauses.size());
  }
}
BENCHMARK(BM_GenPhp)->Arg(5)->Arg(10)->Arg(20);

static void BM_EmbedPairing(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto psi = wres::gen_psi(n);
  for (auto _ : state) {
    auto f = wres::embed_w1(psi, 1);
    benchmark::DoNotOptimize(f.clauses.size());
  }
}
BENCHMARK(BM_EmbedPairing)->Arg(4)->Arg(8)->Arg(16);

static void BM_EmitParseDimacs(benchmark::State& state) {
  auto f = wres::gen_php(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto text = wres::emit_dimacs(f);
    auto again = wres::parse_dimacs(text);
    benchmark::DoNotOptimize(again.num_vars);
  }
}
BENCHMARK(BM_EmitParseDimacs)->Arg(5)->Arg(10);
