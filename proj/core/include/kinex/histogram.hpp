#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kinex {

enum class BinMode { Linear, Logarithmic };

/// Binned density estimate. `total` counts only samples that landed in a
/// bin; zeros under logarithmic binning and samples outside an explicit
/// range are reported on the side instead of being dropped silently.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  BinMode mode = BinMode::Linear;
  std::uint64_t zero_count = 0;
  std::uint64_t outside_count = 0;

  std::size_t bins() const noexcept { return counts.size(); }
  double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
  double midpoint(std::size_t i) const;
  /// counts[i] / (total * width[i])
  double density(std::size_t i) const;
  /// Index of the most populated bin by density.
  std::size_t mode_bin() const;
};

/// Linear bins span [0, max]; logarithmic bins span [min positive, max] with
/// zeros counted in `zero_count`. Throws std::invalid_argument for empty
/// samples or n_bins < 2.
Histogram histogram(std::span<const double> samples, std::size_t n_bins, BinMode mode);

/// Linear bins over the fixed range [lo, hi]; samples outside go to
/// `outside_count`.
Histogram histogram_range(std::span<const double> samples, double lo, double hi,
                          std::size_t n_bins);

/// Bins over caller-provided strictly increasing edges.
Histogram histogram_edges(std::span<const double> samples, std::vector<double> edges,
                          BinMode mode = BinMode::Linear);

}  // namespace kinex
