#pragma once

#include <cstddef>

#include "kinex/simulation.hpp"

namespace kinex {

/// Pools the first and second halves of the trailing 2 * window snapshots
/// and reports whether their two-sample KS distance is below `tol`.
/// Throws std::invalid_argument when fewer than 2 * window snapshots exist.
bool detect_steady_state(const SnapshotSeries& series, std::size_t window, double tol);

/// The KS distance used by detect_steady_state.
double trailing_window_distance(const SnapshotSeries& series, std::size_t window);

}  // namespace kinex
