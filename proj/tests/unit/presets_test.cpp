#include "kinex/presets.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "kinex/errors.hpp"

namespace kinex {
namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kinex_presets_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_check(const ExperimentReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return true;
  return false;
}

TEST(PresetsTest, NamesRoundTrip) {
  for (auto p : {Preset::Gibbs, Preset::Gamma, Preset::ParetoTail, Preset::GasOracle}) {
    EXPECT_EQ(preset_from_name(preset_name(p)), p);
    EXPECT_NO_THROW(validate(preset_config(p)));
  }
  EXPECT_FALSE(preset_from_name("gibs").has_value());
  EXPECT_EQ(preset_names(), "gibbs, gamma, pareto-tail, gas-oracle");
}

TEST(PresetsTest, DefaultSizes) {
  const auto g = preset_config(Preset::Gibbs);
  EXPECT_EQ(g.n_agents, 10000u);
  EXPECT_EQ(g.total_money, 10000.0);
  EXPECT_EQ(g.n_exchanges, 10'000'000u);
  const auto c = preset_config(Preset::Gamma);
  EXPECT_EQ(c.saving, SavingSpec(UniformSaving{0.5}));
  EXPECT_EQ(c.n_agents, 1000u);
  const auto p = preset_config(Preset::ParetoTail);
  EXPECT_EQ(p.saving, SavingSpec(DistributedSaving{0.0, 1.0}));
  EXPECT_EQ(p.n_exchanges, 20'000'000u);
  const auto gas = preset_config(Preset::GasOracle);
  EXPECT_EQ(gas.model, Model::Gas);
  EXPECT_EQ(gas.total_money / static_cast<double>(gas.n_agents), 1.5);
}

TEST(PresetsTest, UnknownNameListsValidOnes) {
  try {
    run_preset("boltzmann", {}, scratch("unknown"));
    FAIL() << "accepted unknown preset";
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("boltzmann"), std::string::npos);
    EXPECT_NE(msg.find(preset_names()), std::string::npos);
  }
}

TEST(PresetsTest, BadOverrideIsConfigError) {
  EXPECT_THROW(run_preset("gibbs", {{"n_agent", "10"}}, scratch("bad")), ConfigError);
}

TEST(PresetsTest, SmallGibbsRunWritesEverything) {
  const auto dir = scratch("gibbs");
  const auto r = run_preset(
      "gibbs", {{"n_agents", "1000"}, {"total_money", "2000"}, {"n_exchanges", "1000000"},
                {"burn_in", "100000"}, {"measure_every", "100000"}},
      dir);
  EXPECT_EQ(r.preset, "gibbs");
  EXPECT_EQ(r.config.n_agents, 1000u);
  EXPECT_EQ(r.sweeps, 1000.0);
  EXPECT_EQ(r.generator, "mt19937_64");
  EXPECT_TRUE(std::filesystem::exists(r.histogram_file));
  EXPECT_TRUE(std::filesystem::exists(r.ccdf_file));
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  EXPECT_TRUE(has_check(r, "ks_vs_gibbs"));
  EXPECT_TRUE(has_check(r, "relative_conservation_error"));
  EXPECT_LT(r.metrics.at("relative_conservation_error"), 1e-12);
  EXPECT_NEAR(r.metrics.at("sigma_fit"), 2.0, 0.15);
  EXPECT_EQ(read_report(dir / "report.json"), r);
  std::filesystem::remove_all(dir);
}

TEST(PresetsTest, SmallGasRunHasOracleChecks) {
  const auto dir = scratch("gas");
  const auto r = run_preset("gas-oracle",
                            {{"n_agents", "1000"}, {"total_money", "1500"},
                             {"n_exchanges", "500000"}, {"burn_in", "100000"},
                             {"measure_every", "1000"}},
                            dir);
  EXPECT_TRUE(has_check(r, "ks_vs_maxwell_boltzmann"));
  EXPECT_TRUE(has_check(r, "lowest_bin_over_peak"));
  EXPECT_NEAR(r.metrics.at("delta"), 1.0, 1e-12);
  std::filesystem::remove_all(dir);
}

TEST(PresetsTest, SimulateRunIsDeterministic) {
  auto config = preset_config(Preset::Gamma);
  config.n_agents = 200;
  config.total_money = 200;
  config.n_exchanges = 200'000;
  config.burn_in = 20'000;
  config.measure_every = 20'000;
  config.ensemble = 3;
  const auto a = run_experiment(config, scratch("det_a"), 1);
  const auto b = run_experiment(config, scratch("det_b"), 2);
  EXPECT_TRUE(a.checks.empty());
  EXPECT_EQ(a.gini, b.gini);
  EXPECT_EQ(a.entropy, b.entropy);
  EXPECT_EQ(slurp(a.histogram_file), slurp(b.histogram_file));
  EXPECT_EQ(slurp(a.ccdf_file), slurp(b.ccdf_file));
  std::filesystem::remove_all(scratch("det_a"));
  std::filesystem::remove_all(scratch("det_b"));
}

}  // namespace
}  // namespace kinex
