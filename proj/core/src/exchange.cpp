#include "kinex/exchange.hpp"

#include <algorithm>
#include <cassert>

namespace kinex {

PairShares exchange_pair(double m_i, double m_j, double lambda_i, double lambda_j,
                         double eps) noexcept {
  assert(m_i >= 0.0 && m_j >= 0.0);
  assert(lambda_i >= 0.0 && lambda_i < 1.0 && lambda_j >= 0.0 && lambda_j < 1.0);
  assert(eps >= 0.0 && eps <= 1.0);

  const double total = m_i + m_j;
  // Without saving the rule is a plain split of the pool; evaluating it
  // directly keeps it bit-identical to eps * (m_i + m_j).
  if (lambda_i == 0.0 && lambda_j == 0.0) {
    const double first = eps * total;
    return {first, total - first};
  }
  const double stake_i = (1.0 - lambda_i) * m_i;
  const double stake_j = (1.0 - lambda_j) * m_j;
  // Written as a net transfer so equal agents at eps = 1/2 come back unchanged.
  const double net = eps * (stake_i + stake_j) - stake_i;
  const double first = std::clamp(m_i + net, 0.0, total);
  return {first, total - first};
}

void step(Population& pop, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(pop.size());
  const auto i = rng.below(n);
  auto j = rng.below(n - 1);
  if (j >= i) ++j;
  const auto lo = std::min(i, j);
  const auto hi = std::max(i, j);
  pop.exchange(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi), rng.uniform01());
}

}  // namespace kinex
