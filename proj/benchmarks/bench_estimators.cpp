#include <benchmark/benchmark.h>

#include "wpolar/mc.hpp"

namespace {

wpolar::mc::EstimatorConfig small_config(std::size_t n) {
  wpolar::mc::EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.grid = wpolar::GridSpec(513);
  cfg.stream = wpolar::RngStream{42, 0};
  return cfg;
}

void BM_EstimateLemma1(benchmark::State& state) {
  const auto cfg = small_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(wpolar::mc::estimate_lemma1(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateLemma1)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EstimateLemma4(benchmark::State& state) {
  const auto cfg = small_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(wpolar::mc::estimate_lemma4(cfg, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateLemma4)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
