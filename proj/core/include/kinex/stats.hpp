#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kinex/histogram.hpp"

namespace kinex {

double mean(std::span<const double> xs);
/// Unbiased (n - 1) sample variance.
double sample_variance(std::span<const double> xs);

/// Plug-in differential entropy in nats: -sum p_i ln(p_i / width_i).
/// Empty bins contribute zero.
double shannon_entropy(const Histogram& h);

/// Mean absolute difference over all ordered pairs divided by twice the
/// mean, computed from the sorted sample in O(n log n).
/// Throws std::invalid_argument on empty or all-zero input.
double gini(std::span<const double> samples);

struct GammaFit {
  double shape = 0.0;
  double scale = 0.0;
};

/// Method of moments: shape = mean^2 / var, scale = var / mean.
/// Throws DegenerateSampleError when the variance is zero.
GammaFit fit_gamma_moments(std::span<const double> samples);

/// sup |F_n(x) - F(x)| for a monotone reference CDF.
template <std::invocable<double> Cdf>
double ks_distance(std::span<const double> samples, Cdf&& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = static_cast<double>(cdf(sorted[i]));
    const double above = static_cast<double>(i + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return std::min(d, 1.0);
}

/// Two-sample statistic sup |F_a(x) - F_b(x)|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

struct CcdfPoint {
  double value;
  double tail_prob;  // fraction of samples >= value
};

/// Sorted descending, one point per distinct value.
std::vector<CcdfPoint> ccdf_points(std::span<const double> samples);

/// Least-squares slope of ln(tail_prob) against ln(value) over the points
/// whose tail probability lies in [p_low, p_high].
double ccdf_slope(std::span<const CcdfPoint> points, double p_low, double p_high);

/// Ordinary least-squares slope of y on x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace kinex
