#include <benchmark/benchmark.h>

#include <vector>

#include "alsim/alsim.hpp"

namespace {

void BM_BetaPdf(benchmark::State& state) {
  const alsim::BetaShape shape{10.0, 10.0};
  double p = 0.0;
  for (auto _ : state) {
    p += 1e-6;
    if (p >= 1.0) p = 1e-6;
    benchmark::DoNotOptimize(alsim::beta_pdf(p, shape));
  }
}
BENCHMARK(BM_BetaPdf);

void BM_IncompleteBeta(benchmark::State& state) {
  const alsim::BetaShape shape{50.0, 50.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(alsim::regularized_incomplete_beta(0.47, shape));
  }
}
BENCHMARK(BM_IncompleteBeta);

void BM_CentralInterval(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(alsim::beta_central_interval({100.0, 100.0}, 0.5));
  }
}
BENCHMARK(BM_CentralInterval);

void BM_WeightedSample(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  alsim::Rng rng(1);
  std::vector<double> weights(size);
  for (auto& w : weights) w = rng.next_uniform();
  for (auto _ : state) {
    benchmark::DoNotOptimize(alsim::weighted_sample_without_replacement(weights, 5, rng));
  }
}
BENCHMARK(BM_WeightedSample)->Arg(100)->Arg(1000)->Arg(10000);

void BM_QueryLoop(benchmark::State& state) {
  alsim::SimulationConfig config;
  config.strategy = alsim::QueryStrategy::bellcurve();
  config.model.kind = state.range(0) == 0 ? alsim::ModelKind::knn : alsim::ModelKind::logistic;
  for (auto _ : state) {
    benchmark::DoNotOptimize(alsim::run_query_loop(config));
  }
}
BENCHMARK(BM_QueryLoop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
