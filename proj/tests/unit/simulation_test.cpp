#include "kinex/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "kinex/densities.hpp"
#include "kinex/ensemble.hpp"
#include "kinex/exchange.hpp"
#include "kinex/stats.hpp"
#include "kinex/steady_state.hpp"
#include "support/oracles.hpp"

namespace kinex {
namespace {

SimConfig market(std::uint64_t n, double total, std::uint64_t exchanges, SavingSpec saving = NoSaving{}) {
  SimConfig c;
  c.model = std::holds_alternative<NoSaving>(saving)        ? Model::Gibbs
            : std::holds_alternative<UniformSaving>(saving) ? Model::UniformSave
                                                             : Model::MixedSave;
  c.saving = saving;
  c.n_agents = n;
  c.total_money = total;
  c.n_exchanges = exchanges;
  c.measure_every = n;
  return c;
}

TEST(InitPopulationTest, EqualEndowment) {
  const auto pop = init_population(100, 1000, NoSaving{}, 7);
  EXPECT_EQ(pop.size(), 100u);
  for (double m : pop.money()) EXPECT_EQ(m, 10.0);
  EXPECT_DOUBLE_EQ(pop.mean_money(), 10.0);
}

TEST(InitPopulationTest, TwoAgentsUniformZero) {
  const auto pop = init_population(2, 2, UniformSaving{0.0}, 1);
  EXPECT_EQ(pop.money(0), 1.0);
  EXPECT_EQ(pop.money(1), 1.0);
  EXPECT_EQ(pop.saving(0), 0.0);
  EXPECT_EQ(pop.saving(1), 0.0);
}

TEST(InitPopulationTest, DistributedPropensitiesAverageHalf) {
  const auto pop = init_population(1000, 1000, DistributedSaving{0.0, 1.0}, 42);
  for (double s : pop.saving()) {
    ASSERT_GE(s, 0.0);
    ASSERT_LT(s, 1.0);
  }
  EXPECT_NEAR(mean(pop.saving()), 0.5, 0.05);
}

TEST(InitPopulationTest, DistributedDrawsAreSeeded) {
  const auto a = init_population(50, 50, DistributedSaving{0.2, 0.9}, 3);
  const auto b = init_population(50, 50, DistributedSaving{0.2, 0.9}, 3);
  const auto c = init_population(50, 50, DistributedSaving{0.2, 0.9}, 4);
  EXPECT_TRUE(std::ranges::equal(a.saving(), b.saving()));
  EXPECT_FALSE(std::ranges::equal(a.saving(), c.saving()));
  for (double s : a.saving()) {
    EXPECT_GE(s, 0.2);
    EXPECT_LT(s, 0.9);
  }
}

TEST(InitPopulationTest, ConcentratedStart) {
  const auto pop = init_population(4, 8, NoSaving{}, 1, InitialAllocation::Concentrated);
  EXPECT_EQ(pop.money(0), 8.0);
  EXPECT_EQ(pop.money(3), 0.0);
}

TEST(InitPopulationTest, RejectsBadInputs) {
  EXPECT_THROW(init_population(1, 10, NoSaving{}, 1), std::invalid_argument);
  EXPECT_THROW(init_population(10, 0, NoSaving{}, 1), std::invalid_argument);
  EXPECT_THROW(init_population(10, -5, NoSaving{}, 1), std::invalid_argument);
  EXPECT_THROW(init_population(10, 10, UniformSaving{1.0}, 1), std::invalid_argument);
  EXPECT_THROW(init_population(10, 10, UniformSaving{-0.1}, 1), std::invalid_argument);
  EXPECT_THROW(init_population(10, 10, DistributedSaving{0.5, 0.4}, 1), std::invalid_argument);
  EXPECT_THROW(init_population(10, 10, DistributedSaving{0.0, 1.5}, 1), std::invalid_argument);
}

TEST(RunTest, SingleExchangeKeepsTotal) {
  auto config = market(2, 2, 1);
  config.measure_every = 1;
  const auto result = run_market(config, 1);
  EXPECT_EQ(result.final_state.money(0) + result.final_state.money(1), 2.0);
  ASSERT_EQ(result.series.size(), 1u);
  EXPECT_EQ(result.series.exchange_index[0], 1u);
}

TEST(RunTest, SnapshotScheduleFollowsBurnIn) {
  auto config = market(10, 10, 1000);
  config.burn_in = 100;
  config.measure_every = 300;
  const auto result = run_market(config, 3);
  ASSERT_EQ(result.series.size(), 3u);
  EXPECT_EQ(result.series.exchange_index, (std::vector<std::uint64_t>{400, 700, 1000}));
  EXPECT_EQ(config.snapshot_count(), 3u);
}

TEST(RunTest, RejectsMismatchedPopulation) {
  auto config = market(10, 10, 100);
  Rng rng(1);
  EXPECT_THROW(run(init_population(5, 10, NoSaving{}, 1), config, rng), std::invalid_argument);
}

TEST(RunTest, SameSeedIsBitIdentical) {
  auto config = market(3, 3, 5000);
  config.measure_every = 7;
  const auto a = run_market(config, 99);
  const auto b = run_market(config, 99);
  EXPECT_EQ(a.series.snapshots, b.series.snapshots);
  EXPECT_TRUE(std::ranges::equal(a.final_state.money(), b.final_state.money()));
  const auto c = run_market(config, 100);
  EXPECT_FALSE(std::ranges::equal(a.final_state.money(), c.final_state.money()));
}

TEST(RunTest, NoSavingSteadyStateIsExponential) {
  auto config = market(10'000, 10'000, 10'000'000);
  config.burn_in = 1'000'000;
  config.measure_every = 100'000;
  const auto result = run_market(config, 2018);
  const GibbsModel gibbs{1.0};
  const double ks =
      ks_distance(result.final_state.money(), [&](double m) { return gibbs_cdf(m, gibbs); });
  EXPECT_LT(ks, 0.02);
  EXPECT_TRUE(detect_steady_state(result.series, 10, 0.02));
}

TEST(RunTest, UniformSavingEmptiesThePauperBin) {
  auto count_poor = [](const SimConfig& c) {
    std::size_t poor = 0;
    for (auto& run : run_market_ensemble(c, 1)) {
      for (double m : run.final_state.money()) poor += m < 0.05 ? 1 : 0;
    }
    return poor;
  };
  auto zero = market(1000, 1000, 2'000'000);
  zero.ensemble = 4;
  auto half = market(1000, 1000, 2'000'000, UniformSaving{0.5});
  half.ensemble = 4;
  const auto poor_zero = count_poor(zero);
  const auto poor_half = count_poor(half);
  EXPECT_GT(poor_zero, 100u);
  EXPECT_LT(5 * poor_half, poor_zero);
}

TEST(RunTest, ConservationOverMillionsOfExchanges) {
  for (SavingSpec spec : {SavingSpec{NoSaving{}}, SavingSpec{UniformSaving{0.3}},
                          SavingSpec{DistributedSaving{0.0, 1.0}}}) {
    auto config = market(500, 777.0, 2'000'000, spec);
    config.measure_every = 2'000'000;
    const auto result = run_market(config, 5);
    EXPECT_LT(std::abs(result.final_state.current_sum() - 777.0) / 777.0, 1e-12);
    for (double m : result.final_state.money()) ASSERT_GE(m, 0.0);
  }
}

TEST(RunTest, SteadyStateDoesNotDependOnStart) {
  auto equal = market(1000, 1000, 4'000'000);
  equal.burn_in = 2'000'000;
  equal.measure_every = 100'000;
  auto concentrated = equal;
  concentrated.initial = InitialAllocation::Concentrated;
  const auto a = run_market(equal, 1);
  const auto b = run_market(concentrated, 2);
  std::vector<double> pa;
  std::vector<double> pb;
  for (const auto& s : a.series.snapshots) pa.insert(pa.end(), s.begin(), s.end());
  for (const auto& s : b.series.snapshots) pb.insert(pb.end(), s.begin(), s.end());
  EXPECT_LT(ks_two_sample(pa, pb), 0.03);
}

// Relabel agents with a permutation and replay the same trades through it.
TEST(PermutationSymmetryTest, RelabeledReplayGivesPermutedState) {
  for (SavingSpec spec : {SavingSpec{NoSaving{}}, SavingSpec{UniformSaving{0.4}}}) {
    const std::size_t n = 37;
    auto a = init_population(n, 100.0, spec, 1, InitialAllocation::Concentrated);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng shuffle(3);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[shuffle.below(i + 1)]);

    std::vector<double> money_b(n);
    for (std::size_t k = 0; k < n; ++k) money_b[perm[k]] = a.money(k);
    Population b(money_b, std::vector<double>(a.saving().begin(), a.saving().end()), 100.0);

    Rng rng(8);
    for (int t = 0; t < 20000; ++t) {
      const auto i = static_cast<std::size_t>(rng.below(n));
      auto j = static_cast<std::size_t>(rng.below(n - 1));
      if (j >= i) ++j;
      const double eps = rng.uniform01();
      a.exchange(i, j, eps);
      b.exchange(perm[i], perm[j], eps);
    }
    for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(b.money(perm[k]), a.money(k));
  }
}

TEST(SteadyStateTest, IdenticalHalvesAreSteady) {
  SnapshotSeries s;
  for (int i = 0; i < 4; ++i) s.snapshots.push_back({1.0, 2.0, 3.0});
  EXPECT_TRUE(detect_steady_state(s, 2, 1e-9));
}

TEST(SteadyStateTest, DifferentExponentialsAreNotSteady) {
  SnapshotSeries s;
  s.snapshots.push_back(testing::exponential_samples(10'000, 1.0, 1));
  s.snapshots.push_back(testing::exponential_samples(10'000, 2.0, 2));
  // sup |exp(-x/2) - exp(-x)| = 1/4 at x = 2 ln 2.
  EXPECT_NEAR(trailing_window_distance(s, 1), 0.25, 0.03);
  EXPECT_FALSE(detect_steady_state(s, 1, 0.05));
}

TEST(SteadyStateTest, RejectsShortSeries) {
  SnapshotSeries s;
  s.snapshots.push_back({1.0});
  s.snapshots.push_back({1.0});
  s.snapshots.push_back({1.0});
  EXPECT_THROW(detect_steady_state(s, 2, 0.1), std::invalid_argument);
  EXPECT_THROW(detect_steady_state(s, 0, 0.1), std::invalid_argument);
}

TEST(EnsembleTest, SchedulingDoesNotChangeResults) {
  auto config = market(200, 200, 200'000, DistributedSaving{0.0, 1.0});
  config.ensemble = 6;
  const auto serial = pooled_final(run_market_ensemble(config, 1));
  const auto threaded = pooled_final(run_market_ensemble(config, 4));
  EXPECT_EQ(serial, threaded);
}

TEST(EnsembleTest, ReplicaSeedsAreOffsetsOfTheBase) {
  SimConfig c;
  c.seed = 100;
  EXPECT_EQ(replica_seed(c, 0), 100u);
  EXPECT_EQ(replica_seed(c, 3), 103u);
}

TEST(ConfigValidationTest, RejectsInconsistentConfigs) {
  auto c = market(10, 10, 100);
  c.burn_in = 200;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = market(10, 10, 100);
  c.measure_every = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = market(10, 10, 100);
  c.ensemble = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = market(10, 10, 100);
  c.saving = UniformSaving{0.5};
  EXPECT_THROW(validate(c), std::invalid_argument);
}

}  // namespace
}  // namespace kinex
