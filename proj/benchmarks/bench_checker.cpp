#include <benchmark/benchmark.h>

#include "wres/families.hpp"
#include "wres/proof.hpp"
#include "wres/prover.hpp"

static void BM_CheckEnumerationRefutation(benchmark::State& state) {
  auto f = wres::gen_pnk(static_cast<int>(state.range(0)), 1);
  auto r = wres::prove({f, 0, wres::Mode::Plain}, wres::Strategy::Enumeration);
  for (auto _ : state) {
    auto c = wres::check(*r.proof, f);
    benchmark::DoNotOptimize(c.size);
  }
}
BENCHMARK(BM_CheckEnumerationRefutation)->Arg(2)->Arg(3);

static void BM_ProofRoundTrip(benchmark::State& state) {
  auto f = wres::gen_pnk(3, 1);
  auto r = wres::prove({f, 0, wres::Mode::Plain}, wres::Strategy::Enumeration);
  auto text = wres::emit_proof(*r.proof);
  for (auto _ : state) {
    auto p = wres::parse_proof(text);
    benchmark::DoNotOptimize(p.steps.size());
  }
}
BENCHMARK(BM_ProofRoundTrip);
