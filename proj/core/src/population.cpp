#include "kinex/population.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kinex/exchange.hpp"
#include "kinex/numeric.hpp"
#include "kinex/rng.hpp"

namespace kinex {
namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x < 1.0; }

}  // namespace

void validate(const SavingSpec& spec) {
  if (const auto* u = std::get_if<UniformSaving>(&spec)) {
    if (!in_unit_interval(u->lambda)) {
      throw std::invalid_argument("saving must lie in [0,1), got " + std::to_string(u->lambda));
    }
  } else if (const auto* d = std::get_if<DistributedSaving>(&spec)) {
    if (!(d->low >= 0.0 && d->high <= 1.0 && d->low < d->high)) {
      throw std::invalid_argument("saving law needs 0 <= low < high <= 1");
    }
  }
}

Population::Population(std::vector<double> money, std::vector<double> saving,
                       double total_money)
    : money_(std::move(money)), saving_(std::move(saving)), total_money_(total_money) {
  if (money_.size() < 2) {
    throw std::invalid_argument("a market needs at least 2 agents");
  }
  if (saving_.size() != money_.size()) {
    throw std::invalid_argument("money and saving vectors differ in length");
  }
  if (!(total_money_ > 0.0) || !std::isfinite(total_money_)) {
    throw std::invalid_argument("total money must be positive");
  }
  for (double m : money_) {
    if (!(m >= 0.0)) throw std::invalid_argument("money holdings must be non-negative");
  }
  for (double s : saving_) {
    if (!in_unit_interval(s)) throw std::invalid_argument("saving must lie in [0,1)");
  }
}

void Population::exchange(std::size_t i, std::size_t j, double eps) noexcept {
  const auto [mi, mj] = exchange_pair(money_[i], money_[j], saving_[i], saving_[j], eps);
  money_[i] = mi;
  money_[j] = mj;
}

double Population::current_sum() const noexcept { return compensated_sum(money_); }

Population init_population(std::size_t n_agents, double total_money, const SavingSpec& spec,
                           std::uint64_t seed, InitialAllocation initial) {
  if (n_agents < 2) {
    throw std::invalid_argument("n_agents must be at least 2");
  }
  if (!(total_money > 0.0) || !std::isfinite(total_money)) {
    throw std::invalid_argument("total_money must be positive");
  }
  validate(spec);

  std::vector<double> money(n_agents, 0.0);
  if (initial == InitialAllocation::Equal) {
    std::fill(money.begin(), money.end(), total_money / static_cast<double>(n_agents));
  } else {
    money[0] = total_money;
  }

  std::vector<double> saving(n_agents, 0.0);
  if (const auto* u = std::get_if<UniformSaving>(&spec)) {
    std::fill(saving.begin(), saving.end(), u->lambda);
  } else if (const auto* d = std::get_if<DistributedSaving>(&spec)) {
    Rng rng(seed);
    const double width = d->high - d->low;
    for (auto& s : saving) {
      do {
        s = d->low + width * rng.uniform01();
      } while (s >= 1.0);
    }
  }
  return Population(std::move(money), std::move(saving), total_money);
}

}  // namespace kinex
