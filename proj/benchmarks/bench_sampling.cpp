#include <benchmark/benchmark.h>

#include "wpolar/brownian.hpp"
#include "wpolar/diffeo.hpp"
#include "wpolar/polar.hpp"

namespace {

void BM_Philox(benchmark::State& state) {
  wpolar::DrawCtx rng(wpolar::RngStream{42, 0}, 0);
  double acc = 0.0;
  for (auto _ : state) acc += rng.normal();
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Philox);

void BM_SampleW0(benchmark::State& state) {
  const wpolar::GridSpec grid(static_cast<int>(state.range(0)));
  const wpolar::Dispersion sigma(1.0);
  std::uint64_t k = 0;
  for (auto _ : state) {
    wpolar::DrawCtx rng(wpolar::RngStream{42, 0}, k++);
    benchmark::DoNotOptimize(wpolar::sample_w0(sigma, grid, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleW0)->Arg(129)->Arg(513)->Arg(2049);

void BM_SampleMu(benchmark::State& state) {
  const wpolar::GridSpec grid(static_cast<int>(state.range(0)));
  const wpolar::Dispersion sigma(1.0);
  std::uint64_t k = 0;
  for (auto _ : state) {
    wpolar::DrawCtx rng(wpolar::RngStream{42, 1}, k++);
    benchmark::DoNotOptimize(wpolar::sample_mu(sigma, grid, rng));
  }
}
BENCHMARK(BM_SampleMu)->Arg(513);

void BM_Reconstruct(benchmark::State& state) {
  const wpolar::GridSpec grid(static_cast<int>(state.range(0)));
  wpolar::DrawCtx rng(wpolar::RngStream{42, 2}, 0);
  const wpolar::Diffeo phi = wpolar::sample_mu(wpolar::Dispersion(2.0), grid, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(wpolar::reconstruct(1.0, phi));
}
BENCHMARK(BM_Reconstruct)->Arg(513);

}  // namespace

BENCHMARK_MAIN();
