#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "kinex/gas.hpp"
#include "kinex/population.hpp"
#include "kinex/rng.hpp"

namespace kinex {

enum class Model {
  Gibbs,        // no saving
  UniformSave,  // one propensity for every agent
  MixedSave,    // quenched per-agent propensities
  Gas,          // ideal-gas reference channel
};

std::string_view to_string(Model model) noexcept;

/// Full reproducible description of one experiment.
struct SimConfig {
  Model model = Model::Gibbs;
  SavingSpec saving = NoSaving{};
  std::uint64_t n_agents = 0;
  double total_money = 0.0;
  std::uint64_t n_exchanges = 0;
  std::uint64_t seed = 0;
  std::uint64_t measure_every = 1;
  std::uint64_t burn_in = 0;
  std::uint64_t ensemble = 1;
  InitialAllocation initial = InitialAllocation::Equal;

  double sweeps() const noexcept {
    return static_cast<double>(n_exchanges) / static_cast<double>(n_agents);
  }
  std::uint64_t snapshot_count() const noexcept;

  bool operator==(const SimConfig&) const = default;
};

/// Throws std::invalid_argument when the config is internally inconsistent.
void validate(const SimConfig& config);

/// Money (or energy) vectors captured every `measure_every` exchanges after
/// burn-in. Memory is O(N * snapshots.size()).
struct SnapshotSeries {
  std::vector<std::uint64_t> exchange_index;
  std::vector<std::vector<double>> snapshots;

  std::size_t size() const noexcept { return snapshots.size(); }
  bool empty() const noexcept { return snapshots.empty(); }
};

struct MarketRun {
  SnapshotSeries series;
  Population final_state;
};

struct GasRun {
  SnapshotSeries series;
  GasEnsemble final_state;
};

/// Executes config.n_exchanges random trades on `pop`.
MarketRun run(Population pop, const SimConfig& config, Rng& rng);

/// Same schedule for the gas channel; one collision per exchange slot.
GasRun run(GasEnsemble gas, const SimConfig& config, Rng& rng);

/// Seeds of replica r follow seed + r; within a replica, propensity draws
/// and trading use separate streams derived from that seed.
std::uint64_t replica_seed(const SimConfig& config, std::uint64_t replica) noexcept;
std::uint64_t propensity_stream(std::uint64_t seed) noexcept;
std::uint64_t trading_stream(std::uint64_t seed) noexcept;

/// Convenience: builds the population for `seed` and runs it.
MarketRun run_market(const SimConfig& config, std::uint64_t seed);
GasRun run_gas(const SimConfig& config, std::uint64_t seed);

}  // namespace kinex
