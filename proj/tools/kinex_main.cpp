// kinex: command-line runner for kinetic exchange market experiments.
//
//   kinex simulate --config <file> --out <dir> [--jobs N] [--seed S]
//   kinex preset <name> [--set key=value ...] --out <dir> [--jobs N]
//   kinex analyze --samples <csv> [--tail-fraction f]
//
// Exit codes: 0 success, 2 config error, 3 I/O error, 4 preset check failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kinex/config.hpp"
#include "kinex/errors.hpp"
#include "kinex/presets.hpp"
#include "kinex/report.hpp"
#include "kinex/stats.hpp"
#include "kinex/tail.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitPresetFailed = 4;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kinex::IoError(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<std::string> env_seed() {
  if (const char* v = std::getenv("KINEX_SEED")) return std::string(v);
  return std::nullopt;
}

void print_summary(const kinex::ExperimentReport& r) {
  std::cout << "model " << kinex::to_string(r.config.model) << ", N=" << r.config.n_agents
            << ", exchanges=" << r.config.n_exchanges << " (" << r.sweeps << " sweeps)"
            << ", replicas=" << r.config.ensemble << ", seed=" << r.seed << "\n";
  std::cout << "  gini=" << r.gini << " entropy=" << r.entropy << " gamma_shape=" << r.gamma_shape
            << " ks_vs_gibbs=" << r.ks_vs_gibbs << "\n";
  if (r.tail) {
    std::cout << "  tail: exponent_pdf=" << r.tail->exponent_pdf << " (k=" << r.tail->k_used
              << ", stderr=" << r.tail->stderr_ccdf << ")"
              << (r.tail->no_plateau ? " no_plateau" : "") << "\n";
  }
  for (const auto& c : r.checks) {
    std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " = " << c.value << " "
              << c.relation << " " << c.threshold << "\n";
  }
  std::cout << "  wrote " << r.histogram_file << ", " << r.ccdf_file << " ("
            << r.wall_time_s << " s)\n";
}

std::vector<double> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kinex::IoError(path, "cannot open for reading");
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    const std::string field = line.substr(0, comma);
    if (field.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(field, &used));
    } catch (const std::exception&) {
      if (first) {  // header row
        first = false;
        continue;
      }
      throw kinex::ConfigError("samples", "non-numeric sample '" + field + "' in " + path);
    }
    first = false;
  }
  if (out.empty()) throw kinex::ConfigError("samples", "no samples in " + path);
  return out;
}

int analyze(const std::string& path, double tail_fraction) {
  const auto samples = read_samples(path);
  kinex::ExperimentReport r;
  const double m = kinex::mean(samples);
  kinex::summarize(r, samples, m);
  nlohmann::json doc;
  doc["n"] = samples.size();
  doc["mean"] = m;
  doc["gini"] = r.gini;
  doc["entropy"] = r.entropy;
  doc["gamma_shape"] = std::isfinite(r.gamma_shape) ? nlohmann::json(r.gamma_shape) : nullptr;
  doc["ks_vs_gibbs"] = r.ks_vs_gibbs;
  try {
    const auto t = kinex::analyze_tail(samples, tail_fraction);
    doc["tail"] = {{"exponent_ccdf", t.exponent_ccdf}, {"exponent_pdf", t.exponent_pdf},
                   {"top_fraction", t.top_fraction},   {"k_used", t.k_used},
                   {"stderr", t.stderr_ccdf},          {"no_plateau", t.no_plateau}};
  } catch (const std::invalid_argument& e) {
    doc["tail"] = nullptr;
    doc["tail_error"] = e.what();
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinetic exchange market simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed_flag;
  auto* simulate = app.add_subcommand("simulate", "Run an experiment from a JSON config");
  simulate->add_option("--config", config_path, "JSON config file")->required();
  simulate->add_option("--out", out_dir, "Output directory")->required();
  simulate->add_option("--jobs", jobs, "Concurrent replicas")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed_flag, "Override the config seed");

  std::string preset_name;
  std::vector<std::string> sets;
  auto* preset = app.add_subcommand("preset", "Run a named preset and its checks");
  preset->add_option("name", preset_name, "gibbs | gamma | pareto-tail | gas-oracle")->required();
  preset->add_option("--set", sets, "Override a config key (key=value)");
  preset->add_option("--out", out_dir, "Output directory")->required();
  preset->add_option("--jobs", jobs, "Concurrent replicas")->check(CLI::PositiveNumber);

  std::string samples_path;
  double tail_fraction = 0.05;
  auto* analyze_cmd = app.add_subcommand("analyze", "Distribution statistics for a sample CSV");
  analyze_cmd->add_option("--samples", samples_path, "CSV with samples in the first column")
      ->required();
  analyze_cmd->add_option("--tail-fraction", tail_fraction, "Top fraction used by Hill")
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*simulate) {
      auto config = kinex::parse_config(read_text(config_path));
      config.seed = kinex::resolve_seed(config.seed, env_seed(), seed_flag);
      const auto report = kinex::run_experiment(config, out_dir, jobs);
      print_summary(report);
      return kExitOk;
    }
    if (*preset) {
      kinex::Overrides overrides;
      for (const auto& s : sets) overrides.push_back(kinex::parse_override(s));
      if (const auto env = env_seed(); env && !env->empty()) {
        const bool has_seed = std::any_of(overrides.begin(), overrides.end(),
                                          [](const auto& kv) { return kv.first == "seed"; });
        if (!has_seed) overrides.emplace_back("seed", *env);
      }
      const auto report = kinex::run_preset(preset_name, overrides, out_dir, jobs);
      print_summary(report);
      return report.passed() ? kExitOk : kExitPresetFailed;
    }
    return analyze(samples_path, tail_fraction);
  } catch (const kinex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const kinex::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
