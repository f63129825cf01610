#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kinex/simulation.hpp"

namespace kinex {

/// Calls task(r) for r in [0, count) on up to `jobs` threads. Results must be
/// written by index so that completion order cannot leak into the output.
void for_each_replica(std::size_t count, unsigned jobs,
                      const std::function<void(std::size_t)>& task);

/// Runs config.ensemble replicas with seeds config.seed + r. The returned
/// vector is indexed by replica, independent of scheduling.
std::vector<MarketRun> run_market_ensemble(const SimConfig& config, unsigned jobs);
std::vector<GasRun> run_gas_ensemble(const SimConfig& config, unsigned jobs);

/// Final states concatenated in replica order.
std::vector<double> pooled_final(const std::vector<MarketRun>& runs);
std::vector<double> pooled_final(const std::vector<GasRun>& runs);

/// Every snapshot of every replica, concatenated in replica order.
std::vector<double> pooled_snapshots(const std::vector<GasRun>& runs);

}  // namespace kinex
