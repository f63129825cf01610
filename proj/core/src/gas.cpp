#include "kinex/gas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kinex/numeric.hpp"

namespace kinex {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuantileTol = 1e-12;

// CDF expressed in the angle t, x = sin^2(t), t in [0, pi/2].
double cdf_of_angle(double t) { return (2.0 * t - 0.5 * std::sin(4.0 * t)) / kPi; }

}  // namespace

GasEnsemble::GasEnsemble(std::vector<double> energy, double total_energy)
    : energy_(std::move(energy)), total_energy_(total_energy) {
  if (energy_.size() < 2) throw std::invalid_argument("a gas needs at least 2 particles");
  if (!(total_energy_ > 0.0) || !std::isfinite(total_energy_)) {
    throw std::invalid_argument("total energy must be positive");
  }
  for (double e : energy_) {
    if (!(e >= 0.0)) throw std::invalid_argument("energies must be non-negative");
  }
}

void GasEnsemble::collide(std::size_t i, std::size_t j, double u) noexcept {
  const auto [ei, ej] = kinex::collide(energy_[i], energy_[j], u);
  energy_[i] = ei;
  energy_[j] = ej;
}

double GasEnsemble::current_sum() const noexcept { return compensated_sum(energy_); }

GasEnsemble init_gas(std::size_t n_particles, double total_energy) {
  if (n_particles < 2) throw std::invalid_argument("n_particles must be at least 2");
  if (!(total_energy > 0.0)) throw std::invalid_argument("total_energy must be positive");
  return GasEnsemble(
      std::vector<double>(n_particles, total_energy / static_cast<double>(n_particles)),
      total_energy);
}

double beta_3_2_cdf(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return cdf_of_angle(std::asin(std::sqrt(x)));
}

double beta_3_2_quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("beta_3_2_quantile: u must lie in [0,1]");
  }
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  // Reflect so the root is solved on the lower half; restores exact symmetry.
  if (u > 0.5) return 1.0 - beta_3_2_quantile(1.0 - u);
  if (u == 0.5) return 0.5;

  // Solve in the angle variable: g(t) = (2t - sin(4t)/2)/pi - u on
  // [0, pi/4], g'(t) = 4 sin^2(2t) / pi. Newton steps that leave the bracket
  // fall back to bisection.
  double lo = 0.0;
  double hi = kPi / 4.0;
  // Small-u start from the series cdf ~ (16/(3 pi)) t^3.
  double t = std::min(std::cbrt(3.0 * kPi * u / 16.0), 0.5 * hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double s2 = std::sin(2.0 * t);
    const double c2 = std::cos(2.0 * t);
    const double g = (2.0 * t - s2 * c2) / kPi - u;
    if (g > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    const double slope = 4.0 * s2 * s2 / kPi;
    if (slope > 0.0 && std::abs(g) < slope * kQuantileTol * 1e-2) {
      t -= g / slope;
      break;
    }
    double next = slope > 0.0 ? t - g / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
    if (hi - lo < kQuantileTol * 1e-2) break;
  }
  return 0.5 * (1.0 - std::cos(2.0 * t));
}

PairShares collide(double e_i, double e_j, double u) {
  const double total = e_i + e_j;
  const double first = std::clamp(total * beta_3_2_quantile(u), 0.0, total);
  return {first, total - first};
}

void step(GasEnsemble& gas, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(gas.size());
  const auto i = rng.below(n);
  auto j = rng.below(n - 1);
  if (j >= i) ++j;
  gas.collide(static_cast<std::size_t>(std::min(i, j)), static_cast<std::size_t>(std::max(i, j)),
              rng.uniform01());
}

}  // namespace kinex
