#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace kinex {

/// Every agent trades its whole holding (lambda = 0).
struct NoSaving {
  bool operator==(const NoSaving&) const = default;
};

/// Every agent shields the same fraction `lambda` in [0, 1).
struct UniformSaving {
  double lambda = 0.0;

  bool operator==(const UniformSaving&) const = default;
};

/// Quenched per-agent propensities drawn once from Uniform(low, high).
/// Draws landing on 1.0 are rejected and redrawn.
struct DistributedSaving {
  double low = 0.0;
  double high = 1.0;

  bool operator==(const DistributedSaving&) const = default;
};

using SavingSpec = std::variant<NoSaving, UniformSaving, DistributedSaving>;

/// Throws std::invalid_argument when the spec has propensities outside [0, 1).
void validate(const SavingSpec& spec);

enum class InitialAllocation {
  Equal,         // every agent starts with M/N
  Concentrated,  // agent 0 starts with everything
};

/// Closed market of N agents sharing a fixed total M.
class Population {
 public:
  Population(std::vector<double> money, std::vector<double> saving, double total_money);

  std::size_t size() const noexcept { return money_.size(); }
  double total_money() const noexcept { return total_money_; }
  /// The average available money per agent, M / N.
  double mean_money() const noexcept {
    return total_money_ / static_cast<double>(money_.size());
  }

  std::span<const double> money() const noexcept { return money_; }
  std::span<const double> saving() const noexcept { return saving_; }

  double money(std::size_t i) const { return money_[i]; }
  double saving(std::size_t i) const { return saving_[i]; }

  /// Trade between agents i and j with random share `eps` in [0, 1].
  void exchange(std::size_t i, std::size_t j, double eps) noexcept;

  /// Sum of current holdings (compensated).
  double current_sum() const noexcept;

 private:
  std::vector<double> money_;
  std::vector<double> saving_;
  double total_money_;
};

/// Builds a population with N agents holding M in total. Propensities are
/// drawn deterministically from `seed` when the spec is distributed.
Population init_population(std::size_t n_agents, double total_money, const SavingSpec& spec,
                           std::uint64_t seed,
                           InitialAllocation initial = InitialAllocation::Equal);

}  // namespace kinex
