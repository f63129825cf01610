#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kinex/simulation.hpp"

namespace kinex {

/// key=value pairs from the command line. Values are read as JSON when
/// they parse as JSON and as plain strings otherwise.
using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Strict JSON config parser.
///
/// Required keys: model, n_agents, total_money, n_exchanges, seed.
/// Optional keys and defaults:
///   saving        (model "cc")   propensity in [0,1)
///   saving_law    (model "ccm")  {"uniform": [low, high]}
///   burn_in       min(10 * n_agents, n_exchanges)
///   measure_every n_agents
///   ensemble      1
///   initial       "equal" | "concentrated"
/// Unknown keys are rejected. Every failure is a ConfigError naming the key.
SimConfig parse_config(std::string_view json_text);
SimConfig parse_config(std::string_view json_text, const Overrides& overrides);

/// Canonical JSON form; parse_config(to_json(c)) == c.
std::string to_json(const SimConfig& config);

/// Parses "key=value". Throws ConfigError on a missing '='.
std::pair<std::string, std::string> parse_override(std::string_view text);

/// Seed precedence: command-line flag, then KINEX_SEED, then the file.
std::uint64_t resolve_seed(std::uint64_t file_seed, std::optional<std::string> env_value,
                           std::optional<std::uint64_t> flag_value);

}  // namespace kinex
