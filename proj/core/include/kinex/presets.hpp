#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kinex/config.hpp"
#include "kinex/report.hpp"

namespace kinex {

enum class Preset {
  Gibbs,       // exponential money distribution without saving
  Gamma,       // uniform saving: pauper density vanishes, mode moves off zero
  ParetoTail,  // quenched saving in U(0,1): m^-2 tail
  GasOracle,   // ideal gas: sqrt(e) exp(-e/delta)
};

std::string_view preset_name(Preset preset) noexcept;
std::optional<Preset> preset_from_name(std::string_view name) noexcept;
/// "gibbs, gamma, pareto-tail, gas-oracle"
std::string preset_names();

/// The desk-scale default experiment behind each preset.
SimConfig preset_config(Preset preset);

/// Runs a preset with key=value overrides, writes histogram.csv, ccdf.csv and
/// report.json into out_dir, and returns the report with its checks filled
/// in. Throws std::invalid_argument for an unknown name (message lists the
/// valid ones), ConfigError for bad overrides and IoError for output failures.
ExperimentReport run_preset(std::string_view name, const Overrides& overrides,
                            const std::filesystem::path& out_dir, unsigned jobs = 1);

/// Runs an arbitrary config (the `simulate` command) without preset checks.
ExperimentReport run_experiment(const SimConfig& config, const std::filesystem::path& out_dir,
                                unsigned jobs = 1);

}  // namespace kinex
