#include "kinex/tail.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kinex {

TailFit hill_tail(std::span<const double> samples, double top_fraction) {
  if (!(top_fraction > 0.0 && top_fraction < 1.0)) {
    throw std::invalid_argument("hill_tail: top_fraction must lie in (0,1)");
  }
  const auto k = static_cast<std::size_t>(
      std::floor(top_fraction * static_cast<double>(samples.size())));
  if (k < kMinTailOrderStatistics || k >= samples.size()) {
    throw std::invalid_argument("hill_tail: need at least 10 order statistics in the tail");
  }

  std::vector<double> sorted(samples.begin(), samples.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k),
                   sorted.end(), std::greater<>());
  const double threshold = sorted[k];
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("hill_tail: threshold order statistic must be positive");
  }
  double log_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) log_sum += std::log(sorted[i] / threshold);
  if (!(log_sum > 0.0)) throw std::invalid_argument("hill_tail: tail has no spread");

  TailFit fit;
  fit.k_used = k;
  fit.top_fraction = top_fraction;
  fit.exponent_ccdf = static_cast<double>(k) / log_sum;
  fit.exponent_pdf = fit.exponent_ccdf + 1.0;
  fit.stderr_ccdf = fit.exponent_ccdf / std::sqrt(static_cast<double>(k));
  return fit;
}

TailFit analyze_tail(std::span<const double> samples, double top_fraction) {
  TailFit fit = hill_tail(samples, top_fraction);
  std::array<TailFit, kPlateauFractions.size()> ladder;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    ladder[i] = hill_tail(samples, kPlateauFractions[i]);
  }
  for (std::size_t a = 0; a < ladder.size(); ++a) {
    for (std::size_t b = a + 1; b < ladder.size(); ++b) {
      const double diff = std::abs(ladder[a].exponent_ccdf - ladder[b].exponent_ccdf);
      const double se = std::hypot(ladder[a].stderr_ccdf, ladder[b].stderr_ccdf);
      if (diff > 3.0 * se) fit.no_plateau = true;
    }
  }
  return fit;
}

}  // namespace kinex
