#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "kinex/histogram.hpp"
#include "kinex/rng.hpp"
#include "kinex/stats.hpp"
#include "kinex/tail.hpp"

namespace {

std::vector<double> exponential_samples(std::size_t n) {
  kinex::Rng rng(11);
  std::vector<double> xs(n);
  for (auto& x : xs) x = -std::log1p(-rng.uniform01());
  return xs;
}

void BM_Gini(benchmark::State& state) {
  const auto xs = exponential_samples(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kinex::gini(xs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gini)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_KsDistance(benchmark::State& state) {
  const auto xs = exponential_samples(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kinex::ks_distance(xs, [](double x) { return -std::expm1(-x); }));
  }
}
BENCHMARK(BM_KsDistance)->Arg(10'000)->Arg(100'000);

void BM_Histogram(benchmark::State& state) {
  const auto xs = exponential_samples(100'000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kinex::histogram_range(xs, 0.0, 10.0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Histogram)->Arg(200)->Arg(6000);

void BM_AnalyzeTail(benchmark::State& state) {
  const auto xs = exponential_samples(20'000);
  for (auto _ : state) benchmark::DoNotOptimize(kinex::analyze_tail(xs, 0.05));
}
BENCHMARK(BM_AnalyzeTail);

}  // namespace
