#pragma once

#include "kinex/population.hpp"
#include "kinex/rng.hpp"

namespace kinex {

struct PairShares {
  double first;
  double second;
};

/// Money-conserving kinetic exchange with saving propensities.
///
///   m_i' = lambda_i m_i + eps [(1 - lambda_i) m_i + (1 - lambda_j) m_j]
///   m_j' = (m_i + m_j) - m_i'
///
/// The second share is always total-minus-first so the pair sum is exact.
/// Requires m >= 0, lambda in [0, 1), eps in [0, 1]; checked only by assert.
PairShares exchange_pair(double m_i, double m_j, double lambda_i, double lambda_j,
                         double eps) noexcept;

/// Picks a uniformly random unordered pair i != j and trades with a fresh
/// eps ~ U[0, 1).
void step(Population& pop, Rng& rng);

}  // namespace kinex
