#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kinex/exchange.hpp"
#include "kinex/rng.hpp"

namespace kinex {

/// Ideal gas held in energy space: one kinetic energy per particle, fixed
/// total. Momentum vectors are never materialized; the sqrt(e) density of
/// states enters only through the collision split.
class GasEnsemble {
 public:
  GasEnsemble(std::vector<double> energy, double total_energy);

  std::size_t size() const noexcept { return energy_.size(); }
  double total_energy() const noexcept { return total_energy_; }
  double mean_energy() const noexcept {
    return total_energy_ / static_cast<double>(energy_.size());
  }
  std::span<const double> energy() const noexcept { return energy_; }
  double energy(std::size_t i) const { return energy_[i]; }

  void collide(std::size_t i, std::size_t j, double u) noexcept;
  double current_sum() const noexcept;

 private:
  std::vector<double> energy_;
  double total_energy_;
};

/// Equal energy E/n for every particle.
GasEnsemble init_gas(std::size_t n_particles, double total_energy);

/// CDF of Beta(3/2, 3/2). With x = sin^2(t): (2t - sin(4t)/2) / pi.
double beta_3_2_cdf(double x);

/// Inverse of beta_3_2_cdf to 1e-12, by bracketed Newton iteration.
/// Throws std::invalid_argument for u outside [0, 1].
double beta_3_2_quantile(double u);

/// Microcanonical split of the pooled energy of two particles with three
/// degrees of freedom each: first share is E * Q(u), Q the Beta(3/2, 3/2)
/// quantile; second share is E minus the first.
PairShares collide(double e_i, double e_j, double u);

/// One collision between a uniformly random pair.
void step(GasEnsemble& gas, Rng& rng);

}  // namespace kinex
