#include "kinex/simulation.hpp"

#include <stdexcept>
#include <string>

#include "kinex/exchange.hpp"
#include "kinex/numeric.hpp"

namespace kinex {
namespace {

template <typename System>
SnapshotSeries drive(System& system, const SimConfig& config, Rng& rng) {
  if (system.size() != config.n_agents) {
    throw std::invalid_argument("population size does not match config.n_agents");
  }
  SnapshotSeries series;
  series.snapshots.reserve(config.snapshot_count());
  series.exchange_index.reserve(config.snapshot_count());

  std::uint64_t done = 0;
  for (; done < config.burn_in; ++done) step(system, rng);
  while (done < config.n_exchanges) {
    const std::uint64_t chunk = std::min(config.measure_every, config.n_exchanges - done);
    for (std::uint64_t k = 0; k < chunk; ++k) step(system, rng);
    done += chunk;
    if (chunk == config.measure_every) {
      const auto values = [&] {
        if constexpr (std::is_same_v<System, GasEnsemble>) {
          return system.energy();
        } else {
          return system.money();
        }
      }();
      series.snapshots.emplace_back(values.begin(), values.end());
      series.exchange_index.push_back(done);
    }
  }
  return series;
}

}  // namespace

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::Gibbs:
      return "gibbs";
    case Model::UniformSave:
      return "cc";
    case Model::MixedSave:
      return "ccm";
    case Model::Gas:
      return "gas";
  }
  return "unknown";
}

std::uint64_t SimConfig::snapshot_count() const noexcept {
  if (measure_every == 0 || n_exchanges < burn_in) return 0;
  return (n_exchanges - burn_in) / measure_every;
}

void validate(const SimConfig& config) {
  if (config.n_agents < 2) throw std::invalid_argument("n_agents must be at least 2");
  if (!(config.total_money > 0.0)) throw std::invalid_argument("total_money must be positive");
  if (config.n_exchanges < config.burn_in) {
    throw std::invalid_argument("n_exchanges must be at least burn_in");
  }
  if (config.measure_every < 1) throw std::invalid_argument("measure_every must be at least 1");
  if (config.ensemble < 1) throw std::invalid_argument("ensemble must be at least 1");
  validate(config.saving);

  const bool consistent = [&] {
    switch (config.model) {
      case Model::Gibbs:
      case Model::Gas:
        return std::holds_alternative<NoSaving>(config.saving);
      case Model::UniformSave:
        return std::holds_alternative<UniformSaving>(config.saving);
      case Model::MixedSave:
        return std::holds_alternative<DistributedSaving>(config.saving);
    }
    return false;
  }();
  if (!consistent) {
    throw std::invalid_argument("saving spec does not match model '" +
                                std::string(to_string(config.model)) + "'");
  }
}

MarketRun run(Population pop, const SimConfig& config, Rng& rng) {
  auto series = drive(pop, config, rng);
  return MarketRun{std::move(series), std::move(pop)};
}

GasRun run(GasEnsemble gas, const SimConfig& config, Rng& rng) {
  auto series = drive(gas, config, rng);
  return GasRun{std::move(series), std::move(gas)};
}

std::uint64_t replica_seed(const SimConfig& config, std::uint64_t replica) noexcept {
  return config.seed + replica;
}

std::uint64_t propensity_stream(std::uint64_t seed) noexcept { return derive_seed(seed, 0); }
std::uint64_t trading_stream(std::uint64_t seed) noexcept { return derive_seed(seed, 1); }

MarketRun run_market(const SimConfig& config, std::uint64_t seed) {
  validate(config);
  if (config.model == Model::Gas) throw std::invalid_argument("run_market: gas config");
  auto pop = init_population(config.n_agents, config.total_money, config.saving,
                             propensity_stream(seed), config.initial);
  Rng rng(trading_stream(seed));
  return run(std::move(pop), config, rng);
}

GasRun run_gas(const SimConfig& config, std::uint64_t seed) {
  validate(config);
  if (config.model != Model::Gas) throw std::invalid_argument("run_gas: not a gas config");
  auto gas = init_gas(config.n_agents, config.total_money);
  Rng rng(trading_stream(seed));
  return run(std::move(gas), config, rng);
}

}  // namespace kinex
