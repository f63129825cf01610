#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kinex/histogram.hpp"
#include "kinex/simulation.hpp"
#include "kinex/stats.hpp"
#include "kinex/tail.hpp"

namespace kinex {

/// One pass/fail assertion attached to a preset run.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<", ">", "<=" or ">="
  bool passed = false;

  bool operator==(const Check&) const = default;
};

Check make_check(std::string name, double value, std::string relation, double threshold);

struct ExperimentReport {
  std::string preset;  // empty for plain simulate runs
  SimConfig config;
  std::uint64_t seed = 0;
  std::string generator;
  double sweeps = 0.0;

  double gini = 0.0;
  double entropy = 0.0;  // nats
  double gamma_shape = 0.0;
  double ks_vs_gibbs = 0.0;
  std::optional<TailFit> tail;
  std::optional<bool> steady_state;

  std::string histogram_file;
  std::string ccdf_file;
  double wall_time_s = 0.0;

  std::map<std::string, double> metrics;
  std::vector<Check> checks;

  bool passed() const;
  bool operator==(const ExperimentReport&) const = default;
};

/// Bins used for every entropy figure: 200 linear bins over [0, 10 * mean].
Histogram entropy_histogram(std::span<const double> samples, double mean_value);

/// Fills the distribution statistics of `report` from pooled samples with
/// known mean (M/N).
void summarize(ExperimentReport& report, std::span<const double> samples, double mean_value);

std::string to_json(const ExperimentReport& report);
ExperimentReport report_from_json(std::string_view text);

/// bin_left,bin_right,count,density with 17 significant digits.
std::string histogram_csv(const Histogram& h);
/// value,tail_prob in ccdf_points order.
std::string ccdf_csv(std::span<const CcdfPoint> points);

struct EmittedFiles {
  std::filesystem::path histogram;
  std::filesystem::path ccdf;
  std::filesystem::path report;
};

/// Writes histogram.csv, ccdf.csv and report.json into out_dir (created if
/// needed) and records the CSV paths in the report. Throws IoError.
EmittedFiles emit_csv(ExperimentReport& report, const Histogram& h,
                      std::span<const CcdfPoint> ccdf, const std::filesystem::path& out_dir);

ExperimentReport read_report(const std::filesystem::path& path);

}  // namespace kinex
