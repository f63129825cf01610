#include <benchmark/benchmark.h>

#include "kinex/exchange.hpp"
#include "kinex/gas.hpp"
#include "kinex/population.hpp"
#include "kinex/rng.hpp"

namespace {

void BM_ExchangePair(benchmark::State& state) {
  kinex::Rng rng(7);
  double a = 3.0;
  double b = 1.0;
  for (auto _ : state) {
    const auto s = kinex::exchange_pair(a, b, 0.3, 0.6, rng.uniform01());
    a = s.first;
    b = s.second;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ExchangePair);

// One random trade in a market of state.range(0) agents.
void BM_MarketStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto pop = kinex::init_population(n, static_cast<double>(n), kinex::DistributedSaving{0.0, 1.0}, 1);
  kinex::Rng rng(2);
  for (auto _ : state) kinex::step(pop, rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MarketStep)->Arg(1'000)->Arg(10'000)->Arg(1'000'000);

void BM_GasStep(benchmark::State& state) {
  auto gas = kinex::init_gas(static_cast<std::size_t>(state.range(0)), 1.5e4);
  kinex::Rng rng(3);
  for (auto _ : state) kinex::step(gas, rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GasStep)->Arg(10'000);

void BM_BetaQuantile(benchmark::State& state) {
  kinex::Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(kinex::beta_3_2_quantile(rng.uniform01()));
}
BENCHMARK(BM_BetaQuantile);

void BM_RngBelow(benchmark::State& state) {
  kinex::Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(rng.below(10'000));
}
BENCHMARK(BM_RngBelow);

}  // namespace
