#include "kinex/presets.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kinex/densities.hpp"
#include "kinex/ensemble.hpp"
#include "kinex/errors.hpp"
#include "kinex/numeric.hpp"
#include "kinex/steady_state.hpp"

namespace kinex {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<Preset, 4> kPresets = {Preset::Gibbs, Preset::Gamma, Preset::ParetoTail,
                                            Preset::GasOracle};
constexpr std::array<double, 4> kSavingSweep = {0.0, 0.2, 0.5, 0.8};
constexpr double kPauperCut = 0.05;        // in units of sigma
constexpr std::size_t kGasFineBins = 6000;  // width delta / 400 over [0, 10 <e>]
constexpr std::size_t kSteadyWindow = 10;
constexpr double kSteadyTol = 0.02;

struct Execution {
  ExperimentReport report;
  std::vector<double> samples;
  std::vector<MarketRun> market;
  std::vector<GasRun> gas;
  Clock::time_point started;
};

double config_mean(const SimConfig& c) {
  return c.total_money / static_cast<double>(c.n_agents);
}

template <typename Run, typename Get>
double worst_conservation(const std::vector<Run>& runs, double total, Get&& get_sum) {
  double worst = 0.0;
  for (const auto& r : runs) worst = std::max(worst, std::abs(get_sum(r) - total) / total);
  return worst;
}

Execution execute(const SimConfig& config, unsigned jobs) {
  validate(config);
  Execution ex;
  ex.started = Clock::now();
  const double sigma = config_mean(config);

  const SnapshotSeries* first_series = nullptr;
  if (config.model == Model::Gas) {
    ex.gas = run_gas_ensemble(config, jobs);
    ex.samples = pooled_final(ex.gas);
    first_series = &ex.gas.front().series;
    ex.report.metrics["relative_conservation_error"] = worst_conservation(
        ex.gas, config.total_money, [](const GasRun& r) { return r.final_state.current_sum(); });
  } else {
    ex.market = run_market_ensemble(config, jobs);
    ex.samples = pooled_final(ex.market);
    first_series = &ex.market.front().series;
    ex.report.metrics["relative_conservation_error"] = worst_conservation(
        ex.market, config.total_money,
        [](const MarketRun& r) { return r.final_state.current_sum(); });
  }

  auto& r = ex.report;
  r.config = config;
  r.seed = config.seed;
  r.generator = std::string(Rng::kAlgorithm);
  r.sweeps = config.sweeps();
  summarize(r, ex.samples, sigma);
  if (first_series->size() >= 2) {
    const std::size_t window = std::min(kSteadyWindow, first_series->size() / 2);
    r.steady_state = detect_steady_state(*first_series, window, kSteadyTol);
  }

  const auto h = entropy_histogram(ex.samples, sigma);
  const double sample_mean = mean(ex.samples);
  r.metrics["mean"] = sample_mean;
  r.metrics["expected_mean"] = sigma;
  r.metrics["mode_over_mean"] = h.midpoint(h.mode_bin()) / sigma;
  r.metrics["lowest_bin_density"] = h.density(0);
  r.metrics["peak_density"] = h.density(h.mode_bin());
  return ex;
}

void finish(Execution& ex, const std::filesystem::path& out_dir) {
  const auto& c = ex.report.config;
  const double sigma = config_mean(c);
  const Histogram h = c.model == Model::MixedSave
                          ? histogram(ex.samples, 60, BinMode::Logarithmic)
                          : entropy_histogram(ex.samples, sigma);
  const auto ccdf = ccdf_points(ex.samples);
  ex.report.wall_time_s = std::chrono::duration<double>(Clock::now() - ex.started).count();
  emit_csv(ex.report, h, ccdf, out_dir);
}

double pauper_density(std::span<const double> samples, double sigma) {
  const double cut = kPauperCut * sigma;
  const auto below = std::count_if(samples.begin(), samples.end(),
                                   [&](double m) { return m < cut; });
  return static_cast<double>(below) / (static_cast<double>(samples.size()) * cut);
}

struct MeanSe {
  double mean;
  double se;
};

MeanSe replica_entropy(const std::vector<MarketRun>& runs, double sigma) {
  std::vector<double> values;
  for (const auto& run : runs) {
    values.push_back(shannon_entropy(entropy_histogram(run.final_state.money(), sigma)));
  }
  const double m = mean(values);
  const double se = values.size() > 1
                        ? std::sqrt(sample_variance(values) / static_cast<double>(values.size()))
                        : 0.0;
  return {m, se};
}

void gibbs_checks(Execution& ex) {
  auto& r = ex.report;
  const double sigma = config_mean(r.config);
  const double sigma_fit = mean(ex.samples);
  r.metrics["sigma_fit"] = sigma_fit;
  r.metrics["rate_fit"] = 1.0 / sigma_fit;
  r.checks.push_back(make_check("ks_vs_gibbs", r.ks_vs_gibbs, "<", 0.02));
  r.checks.push_back(make_check("gini_deviation_from_half", std::abs(r.gini - 0.5), "<=", 0.01));
  r.checks.push_back(make_check("relative_conservation_error",
                                r.metrics["relative_conservation_error"], "<", 1e-12));
  r.checks.push_back(
      make_check("sigma_fit_relative_error", std::abs(sigma_fit / sigma - 1.0), "<", 0.01));
}

void gamma_checks(Execution& ex, unsigned jobs) {
  auto& r = ex.report;
  const auto* uniform = std::get_if<UniformSaving>(&r.config.saving);
  if (uniform == nullptr) throw ConfigError("model", "preset gamma requires model 'cc'");
  const double sigma = config_mean(r.config);

  std::map<double, const std::vector<MarketRun>*> by_lambda;
  by_lambda[uniform->lambda] = &ex.market;
  std::vector<std::vector<MarketRun>> extra;
  extra.reserve(kSavingSweep.size());
  for (double lambda : kSavingSweep) {
    if (by_lambda.contains(lambda)) continue;
    SimConfig c = r.config;
    if (lambda == 0.0) {
      c.model = Model::Gibbs;
      c.saving = NoSaving{};
    } else {
      c.saving = UniformSaving{lambda};
    }
    extra.push_back(run_market_ensemble(c, jobs));
    by_lambda[lambda] = &extra.back();
  }

  const auto& reference = *by_lambda.at(0.0);
  const double d_lambda = pauper_density(ex.samples, sigma);
  const double d_zero = pauper_density(pooled_final(reference), sigma);
  r.metrics["pauper_density"] = d_lambda;
  r.metrics["pauper_density_no_saving"] = d_zero;
  r.metrics["pauper_density_over_c"] = d_lambda * sigma;
  r.checks.push_back(make_check("pauper_density_ratio", d_lambda / d_zero, "<", 0.2));
  r.checks.push_back(make_check("mode_over_sigma", r.metrics["mode_over_mean"], ">", 0.3));
  r.checks.push_back(make_check("gamma_shape", r.gamma_shape, ">", 1.5));

  double min_increment = INFINITY;
  double previous = -INFINITY;
  for (double lambda : kSavingSweep) {
    const double shape = fit_gamma_moments(pooled_final(*by_lambda.at(lambda))).shape;
    r.metrics["gamma_shape_lambda_" + std::to_string(lambda).substr(0, 3)] = shape;
    min_increment = std::min(min_increment, shape - previous);
    previous = shape;
  }
  r.checks.push_back(make_check("gamma_shape_min_increment", min_increment, ">", 0.0));

  const auto h0 = replica_entropy(reference, sigma);
  const auto hl = replica_entropy(ex.market, sigma);
  const double gap = h0.mean - hl.mean;
  const double se = std::hypot(h0.se, hl.se);
  r.metrics["entropy_no_saving"] = h0.mean;
  r.metrics["entropy_no_saving_se"] = h0.se;
  r.metrics["entropy_saving"] = hl.mean;
  r.metrics["entropy_saving_se"] = hl.se;
  r.metrics["entropy_gap"] = gap;
  r.checks.push_back(make_check("entropy_gap_in_se", se > 0.0 ? gap / se : 0.0, ">", 3.0));
}

void pareto_checks(Execution& ex, unsigned jobs) {
  auto& r = ex.report;
  if (!std::holds_alternative<DistributedSaving>(r.config.saving)) {
    throw ConfigError("model", "preset pareto-tail requires model 'ccm'");
  }
  if (!r.tail) throw std::invalid_argument("pareto-tail: too few samples for a tail fit");
  r.checks.push_back(make_check("tail_exponent_pdf_low", r.tail->exponent_pdf, ">=", 1.6));
  r.checks.push_back(make_check("tail_exponent_pdf_high", r.tail->exponent_pdf, "<=", 2.4));

  SimConfig reference = preset_config(Preset::Gibbs);
  reference.seed = r.config.seed;
  const auto runs = run_market_ensemble(reference, jobs);
  const auto fit = analyze_tail(pooled_final(runs), 0.05);
  r.metrics["no_saving_tail_exponent_pdf"] = fit.exponent_pdf;
  r.checks.push_back(
      make_check("no_saving_no_plateau", fit.no_plateau ? 1.0 : 0.0, ">", 0.5));
}

void gas_checks(Execution& ex) {
  auto& r = ex.report;
  const double mean_energy = mean(ex.samples);
  const auto model = MBModel::from_mean(mean_energy);
  const double ks = ks_distance(ex.samples, [&](double e) { return mb_cdf(e, model); });
  r.metrics["delta"] = model.delta;
  r.checks.push_back(make_check("ks_vs_maxwell_boltzmann", ks, "<", 0.02));

  const auto pooled = pooled_snapshots(ex.gas);
  const auto& source = pooled.empty() ? ex.samples : pooled;
  const auto fine = histogram_range(source, 0.0, 10.0 * mean_energy, kGasFineBins);
  const double peak = fine.density(fine.mode_bin());
  r.metrics["fine_bin_width_over_delta"] = fine.width(0) / model.delta;
  r.metrics["pooled_samples"] = static_cast<double>(source.size());
  r.checks.push_back(make_check("lowest_bin_over_peak", fine.density(0) / peak, "<", 0.1));
  r.checks.push_back(make_check("relative_conservation_error",
                                r.metrics["relative_conservation_error"], "<", 1e-12));
}

}  // namespace

std::string_view preset_name(Preset preset) noexcept {
  switch (preset) {
    case Preset::Gibbs:
      return "gibbs";
    case Preset::Gamma:
      return "gamma";
    case Preset::ParetoTail:
      return "pareto-tail";
    case Preset::GasOracle:
      return "gas-oracle";
  }
  return "unknown";
}

std::optional<Preset> preset_from_name(std::string_view name) noexcept {
  for (auto p : kPresets) {
    if (preset_name(p) == name) return p;
  }
  return std::nullopt;
}

std::string preset_names() {
  std::string out;
  for (auto p : kPresets) {
    if (!out.empty()) out += ", ";
    out += preset_name(p);
  }
  return out;
}

SimConfig preset_config(Preset preset) {
  SimConfig c;
  c.seed = 1931;
  switch (preset) {
    case Preset::Gibbs:
      c.model = Model::Gibbs;
      c.n_agents = 10'000;
      c.total_money = 10'000.0;
      c.n_exchanges = 10'000'000;
      c.burn_in = 1'000'000;
      c.measure_every = 100'000;
      break;
    case Preset::Gamma:
      c.model = Model::UniformSave;
      c.saving = UniformSaving{0.5};
      c.n_agents = 1'000;
      c.total_money = 1'000.0;
      c.n_exchanges = 10'000'000;
      c.burn_in = 1'000'000;
      c.measure_every = 100'000;
      c.ensemble = 10;
      break;
    case Preset::ParetoTail:
      c.model = Model::MixedSave;
      c.saving = DistributedSaving{0.0, 1.0};
      c.n_agents = 1'000;
      c.total_money = 1'000.0;
      c.n_exchanges = 20'000'000;
      c.burn_in = 2'000'000;
      c.measure_every = 1'000'000;
      c.ensemble = 20;
      break;
    case Preset::GasOracle:
      c.model = Model::Gas;
      c.n_agents = 10'000;
      c.total_money = 15'000.0;  // delta = 1
      c.n_exchanges = 10'000'000;
      c.burn_in = 1'000'000;
      c.measure_every = 10'000;
      break;
  }
  return c;
}

ExperimentReport run_preset(std::string_view name, const Overrides& overrides,
                            const std::filesystem::path& out_dir, unsigned jobs) {
  const auto preset = preset_from_name(name);
  if (!preset) {
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "'; valid presets: " + preset_names());
  }
  const SimConfig config = parse_config(to_json(preset_config(*preset)), overrides);
  Execution ex = execute(config, jobs);
  ex.report.preset = std::string(name);
  switch (*preset) {
    case Preset::Gibbs:
      gibbs_checks(ex);
      break;
    case Preset::Gamma:
      gamma_checks(ex, jobs);
      break;
    case Preset::ParetoTail:
      pareto_checks(ex, jobs);
      break;
    case Preset::GasOracle:
      gas_checks(ex);
      break;
  }
  finish(ex, out_dir);
  return ex.report;
}

ExperimentReport run_experiment(const SimConfig& config, const std::filesystem::path& out_dir,
                                unsigned jobs) {
  Execution ex = execute(config, jobs);
  finish(ex, out_dir);
  return ex.report;
}

}  // namespace kinex
