#include "kinex/densities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kinex {

double gibbs_pdf(double m, const GibbsModel& model) {
  if (m < 0.0) throw std::invalid_argument("gibbs_pdf: money must be non-negative");
  return std::exp(-m / model.sigma) / model.sigma;
}

double gibbs_cdf(double m, const GibbsModel& model) {
  if (m <= 0.0) return 0.0;
  return -std::expm1(-m / model.sigma);
}

double mb_pdf(double e, const MBModel& model) {
  if (e < 0.0) throw std::invalid_argument("mb_pdf: energy must be non-negative");
  const double x = e / model.delta;
  return 2.0 * std::numbers::inv_sqrtpi * std::sqrt(x) * std::exp(-x) / model.delta;
}

double mb_cdf(double e, const MBModel& model) {
  if (e <= 0.0) return 0.0;
  const double x = e / model.delta;
  return std::erf(std::sqrt(x)) - 2.0 * std::numbers::inv_sqrtpi * std::sqrt(x) * std::exp(-x);
}

}  // namespace kinex
