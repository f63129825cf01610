#include "kinex/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kinex {
namespace {

std::vector<double> linear_edges(double lo, double hi, std::size_t n_bins) {
  std::vector<double> edges(n_bins + 1);
  const double w = (hi - lo) / static_cast<double>(n_bins);
  for (std::size_t i = 0; i <= n_bins; ++i) edges[i] = lo + w * static_cast<double>(i);
  edges.back() = hi;
  return edges;
}

std::vector<double> log_edges(double lo, double hi, std::size_t n_bins) {
  std::vector<double> edges(n_bins + 1);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i <= n_bins; ++i) {
    edges[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n_bins));
  }
  edges.front() = lo;
  edges.back() = hi;
  return edges;
}

void check_inputs(std::span<const double> samples, std::size_t n_bins) {
  if (samples.empty()) throw std::invalid_argument("histogram: no samples");
  if (n_bins < 2) throw std::invalid_argument("histogram: need at least 2 bins");
}

}  // namespace

double Histogram::midpoint(std::size_t i) const {
  if (mode == BinMode::Logarithmic) return std::sqrt(edges[i] * edges[i + 1]);
  return 0.5 * (edges[i] + edges[i + 1]);
}

double Histogram::density(std::size_t i) const {
  if (total == 0) return 0.0;
  return static_cast<double>(counts[i]) / (static_cast<double>(total) * width(i));
}

std::size_t Histogram::mode_bin() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (density(i) > density(best)) best = i;
  }
  return best;
}

Histogram histogram_edges(std::span<const double> samples, std::vector<double> edges,
                          BinMode mode) {
  if (edges.size() < 3) throw std::invalid_argument("histogram: need at least 2 bins");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) {
      throw std::invalid_argument("histogram: edges must be strictly increasing");
    }
  }
  if (mode == BinMode::Logarithmic && !(edges.front() > 0.0)) {
    throw std::invalid_argument("histogram: logarithmic edges must start above zero");
  }

  Histogram h;
  h.mode = mode;
  h.counts.assign(edges.size() - 1, 0);
  h.edges = std::move(edges);
  const double lo = h.edges.front();
  const double hi = h.edges.back();
  for (double x : samples) {
    if (mode == BinMode::Logarithmic && x <= 0.0) {
      ++h.zero_count;
      continue;
    }
    if (x < lo || x > hi) {
      ++h.outside_count;
      continue;
    }
    // Right-closed last bin; otherwise [edge_i, edge_{i+1}).
    auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
    auto bin = static_cast<std::size_t>(std::distance(h.edges.begin(), it));
    bin = bin == 0 ? 0 : bin - 1;
    bin = std::min(bin, h.counts.size() - 1);
    ++h.counts[bin];
    ++h.total;
  }
  return h;
}

Histogram histogram(std::span<const double> samples, std::size_t n_bins, BinMode mode) {
  check_inputs(samples, n_bins);
  if (mode == BinMode::Linear) {
    double hi = *std::max_element(samples.begin(), samples.end());
    if (!(hi > 0.0)) hi = 1.0;
    return histogram_edges(samples, linear_edges(0.0, hi, n_bins), mode);
  }
  double lo = INFINITY;
  double hi = 0.0;
  for (double x : samples) {
    if (x > 0.0) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (!std::isfinite(lo)) throw std::invalid_argument("histogram: no positive samples for log bins");
  if (!(hi > lo)) hi = lo * 2.0;
  return histogram_edges(samples, log_edges(lo, hi, n_bins), mode);
}

Histogram histogram_range(std::span<const double> samples, double lo, double hi,
                          std::size_t n_bins) {
  check_inputs(samples, n_bins);
  if (!(hi > lo)) throw std::invalid_argument("histogram: empty range");
  return histogram_edges(samples, linear_edges(lo, hi, n_bins), BinMode::Linear);
}

}  // namespace kinex
