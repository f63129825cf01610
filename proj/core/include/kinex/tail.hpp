#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace kinex {

/// Power-law tail estimate. Both conventions are carried:
/// P(X > x) ~ x^-exponent_ccdf and n(x) ~ x^-exponent_pdf, with
/// exponent_pdf = exponent_ccdf + 1.
struct TailFit {
  double exponent_ccdf = 0.0;
  double exponent_pdf = 0.0;
  double top_fraction = 0.0;
  std::size_t k_used = 0;
  double stderr_ccdf = 0.0;
  /// Set by analyze_tail when the estimates at top 10% / 5% / 2% disagree.
  bool no_plateau = false;

  bool operator==(const TailFit&) const = default;
};

inline constexpr std::size_t kMinTailOrderStatistics = 10;
inline constexpr std::array<double, 3> kPlateauFractions = {0.10, 0.05, 0.02};

/// Hill estimator over the k = floor(top_fraction * n) largest samples:
/// exponent_ccdf = k / sum_{i<=k} ln(x_(i) / x_(k+1)), stderr = exponent / sqrt(k).
/// Throws std::invalid_argument if k < 10 or the threshold order statistic
/// is not positive.
TailFit hill_tail(std::span<const double> samples, double top_fraction);

/// Hill at `top_fraction`, plus the plateau check: `no_plateau` is raised
/// when any two of the estimates at 10%, 5% and 2% differ by more than three
/// combined standard errors.
TailFit analyze_tail(std::span<const double> samples, double top_fraction);

}  // namespace kinex
