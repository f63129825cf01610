#pragma once

namespace kinex {

/// Exponential money density n(m) = C exp(-m / sigma) with C = 1 / sigma and
/// sigma = M / N.
struct GibbsModel {
  double sigma = 1.0;

  static GibbsModel from_totals(double total_money, double n_agents) {
    return GibbsModel{total_money / n_agents};
  }
  double normalization() const noexcept { return 1.0 / sigma; }
};

/// Maxwell-Boltzmann energy density for an ideal gas in three dimensions,
/// proportional to sqrt(e) exp(-e / delta), where delta plays the role of kT.
struct MBModel {
  double delta = 1.0;

  /// delta inferred from a measured mean energy (<e> = 3/2 delta).
  static MBModel from_mean(double mean_energy) { return MBModel{2.0 * mean_energy / 3.0}; }
  double mean() const noexcept { return 1.5 * delta; }
};

/// (1/sigma) exp(-m/sigma). Throws std::invalid_argument for m < 0.
double gibbs_pdf(double m, const GibbsModel& model);
double gibbs_cdf(double m, const GibbsModel& model);

/// (2/sqrt(pi)) delta^(-3/2) sqrt(e) exp(-e/delta). Throws for e < 0.
double mb_pdf(double e, const MBModel& model);
/// Regularized lower incomplete gamma P(3/2, e/delta).
double mb_cdf(double e, const MBModel& model);

}  // namespace kinex
