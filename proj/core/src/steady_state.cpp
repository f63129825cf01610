#include "kinex/steady_state.hpp"

#include <stdexcept>
#include <vector>

#include "kinex/stats.hpp"

namespace kinex {

double trailing_window_distance(const SnapshotSeries& series, std::size_t window) {
  if (window == 0) throw std::invalid_argument("steady state: window must be positive");
  if (series.size() < 2 * window) {
    throw std::invalid_argument("steady state: series shorter than 2 * window");
  }
  const std::size_t start = series.size() - 2 * window;
  std::vector<double> early;
  std::vector<double> late;
  for (std::size_t s = start; s < start + window; ++s) {
    early.insert(early.end(), series.snapshots[s].begin(), series.snapshots[s].end());
  }
  for (std::size_t s = start + window; s < series.size(); ++s) {
    late.insert(late.end(), series.snapshots[s].begin(), series.snapshots[s].end());
  }
  return ks_two_sample(early, late);
}

bool detect_steady_state(const SnapshotSeries& series, std::size_t window, double tol) {
  return trailing_window_distance(series, window) < tol;
}

}  // namespace kinex
