#include "kinex/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace kinex {

void for_each_replica(std::size_t count, unsigned jobs,
                      const std::function<void(std::size_t)>& task) {
  const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers == 1) {
    for (std::size_t r = 0; r < count; ++r) task(r);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t r = next++; r < count; r = next++) {
        try {
          task(r);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

template <typename Run, typename Fn>
std::vector<Run> run_all(const SimConfig& config, unsigned jobs, Fn&& one) {
  validate(config);
  std::vector<std::optional<Run>> slots(config.ensemble);
  for_each_replica(slots.size(), jobs,
                   [&](std::size_t r) { slots[r].emplace(one(config, replica_seed(config, r))); });
  std::vector<Run> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <typename Run, typename Get>
std::vector<double> concat_final(const std::vector<Run>& runs, Get&& get) {
  std::vector<double> out;
  for (const auto& r : runs) {
    const auto values = get(r.final_state);
    out.insert(out.end(), values.begin(), values.end());
  }
  return out;
}

}  // namespace

std::vector<MarketRun> run_market_ensemble(const SimConfig& config, unsigned jobs) {
  return run_all<MarketRun>(config, jobs, run_market);
}

std::vector<GasRun> run_gas_ensemble(const SimConfig& config, unsigned jobs) {
  return run_all<GasRun>(config, jobs, run_gas);
}

std::vector<double> pooled_final(const std::vector<MarketRun>& runs) {
  return concat_final(runs, [](const Population& p) { return p.money(); });
}

std::vector<double> pooled_final(const std::vector<GasRun>& runs) {
  return concat_final(runs, [](const GasEnsemble& g) { return g.energy(); });
}

std::vector<double> pooled_snapshots(const std::vector<GasRun>& runs) {
  std::vector<double> out;
  for (const auto& r : runs) {
    for (const auto& snap : r.series.snapshots) out.insert(out.end(), snap.begin(), snap.end());
  }
  return out;
}

}  // namespace kinex
