#include "kinex/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kinex/errors.hpp"
#include "kinex/numeric.hpp"

namespace kinex {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: no samples");
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: need at least 2 samples");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - 1);
}

double shannon_entropy(const Histogram& h) {
  if (h.total == 0) throw std::invalid_argument("entropy: empty histogram");
  const auto total = static_cast<double>(h.total);
  double s = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    if (h.counts[i] == 0) continue;
    const double p = static_cast<double>(h.counts[i]) / total;
    s -= p * std::log(p / h.width(i));
  }
  return s;
}

double gini(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("gini: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::stable_sort(sorted.begin(), sorted.end());
  const double sum = compensated_sum(sorted);
  if (!(sum > 0.0)) throw std::invalid_argument("gini: samples are all zero");
  const auto n = static_cast<double>(sorted.size());
  // sum_{i<j} (x_j - x_i) = sum_k (2k - n + 1) x_(k), k zero-based.
  std::vector<double> terms(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    terms[k] = (2.0 * static_cast<double>(k) - n + 1.0) * sorted[k];
  }
  const double g = compensated_sum(terms) / (n * sum);
  return std::clamp(g, 0.0, 1.0);
}

GammaFit fit_gamma_moments(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("gamma fit: need at least 2 samples");
  const double m = mean(samples);
  const double v = sample_variance(samples);
  if (!(v > 0.0)) throw DegenerateSampleError("gamma fit: zero variance");
  if (!(m > 0.0)) throw std::invalid_argument("gamma fit: mean must be positive");
  return GammaFit{m * m / v, v / m};
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto nx = static_cast<double>(x.size());
  const auto ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

std::vector<CcdfPoint> ccdf_points(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("ccdf: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto n = static_cast<double>(sorted.size());
  std::vector<CcdfPoint> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const bool last_of_run = i + 1 == sorted.size() || sorted[i + 1] != sorted[i];
    if (last_of_run) out.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  return out;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("least squares: need two or more paired points");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (!(sxx > 0.0)) throw DegenerateSampleError("least squares: x has no spread");
  return sxy / sxx;
}

double ccdf_slope(std::span<const CcdfPoint> points, double p_low, double p_high) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& p : points) {
    if (p.tail_prob >= p_low && p.tail_prob <= p_high && p.value > 0.0) {
      lx.push_back(std::log(p.value));
      ly.push_back(std::log(p.tail_prob));
    }
  }
  return least_squares_slope(lx, ly);
}

}  // namespace kinex
