#include "kinex/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "kinex/config.hpp"
#include "kinex/densities.hpp"
#include "kinex/errors.hpp"

namespace kinex {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_real(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  return v.is_null() ? kNaN : v.get<double>();
}

json tail_to_json(const TailFit& t) {
  return {{"exponent_ccdf", real(t.exponent_ccdf)}, {"exponent_pdf", real(t.exponent_pdf)},
          {"top_fraction", t.top_fraction},         {"k_used", t.k_used},
          {"stderr", real(t.stderr_ccdf)},          {"no_plateau", t.no_plateau}};
}

TailFit tail_from_json(const json& doc) {
  TailFit t;
  t.exponent_ccdf = read_real(doc, "exponent_ccdf");
  t.exponent_pdf = read_real(doc, "exponent_pdf");
  t.top_fraction = doc.at("top_fraction").get<double>();
  t.k_used = doc.at("k_used").get<std::size_t>();
  t.stderr_ccdf = read_real(doc, "stderr");
  t.no_plateau = doc.at("no_plateau").get<bool>();
  return t;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

}  // namespace

Check make_check(std::string name, double value, std::string relation, double threshold) {
  bool ok = false;
  if (relation == "<") {
    ok = value < threshold;
  } else if (relation == "<=") {
    ok = value <= threshold;
  } else if (relation == ">") {
    ok = value > threshold;
  } else if (relation == ">=") {
    ok = value >= threshold;
  } else {
    throw std::invalid_argument("make_check: unknown relation " + relation);
  }
  return Check{std::move(name), value, threshold, std::move(relation), ok};
}

bool ExperimentReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Histogram entropy_histogram(std::span<const double> samples, double mean_value) {
  return histogram_range(samples, 0.0, 10.0 * mean_value, 200);
}

void summarize(ExperimentReport& report, std::span<const double> samples, double mean_value) {
  report.gini = gini(samples);
  report.entropy = shannon_entropy(entropy_histogram(samples, mean_value));
  try {
    report.gamma_shape = fit_gamma_moments(samples).shape;
  } catch (const DegenerateSampleError&) {
    report.gamma_shape = kNaN;
  }
  const GibbsModel gibbs{mean_value};
  report.ks_vs_gibbs = ks_distance(samples, [&](double m) { return gibbs_cdf(m, gibbs); });
  const auto smallest = kPlateauFractions.back() * static_cast<double>(samples.size());
  report.tail.reset();
  if (smallest >= static_cast<double>(kMinTailOrderStatistics)) {
    try {
      report.tail = analyze_tail(samples, 0.05);
    } catch (const std::invalid_argument&) {
      // degenerate tail (e.g. all-equal holdings): reported as absent
    }
  }
}

std::string to_json(const ExperimentReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", real(c.value)},
                      {"relation", c.relation},
                      {"threshold", c.threshold},
                      {"passed", c.passed}});
  }
  json metrics = json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = real(v);

  json doc;
  doc["preset"] = r.preset;
  doc["config"] = json::parse(to_json(r.config));
  doc["seed"] = r.seed;
  doc["generator"] = r.generator;
  doc["sweeps"] = r.sweeps;
  doc["gini"] = real(r.gini);
  doc["entropy"] = real(r.entropy);
  doc["gamma_shape"] = real(r.gamma_shape);
  doc["ks_vs_gibbs"] = real(r.ks_vs_gibbs);
  doc["tail"] = r.tail ? tail_to_json(*r.tail) : json(nullptr);
  doc["steady_state"] = r.steady_state ? json(*r.steady_state) : json(nullptr);
  doc["histogram_file"] = r.histogram_file;
  doc["ccdf_file"] = r.ccdf_file;
  doc["wall_time_s"] = r.wall_time_s;
  doc["metrics"] = std::move(metrics);
  doc["checks"] = std::move(checks);
  doc["passed"] = r.passed();
  return doc.dump(2) + "\n";
}

ExperimentReport report_from_json(std::string_view text) {
  const json doc = json::parse(text);
  ExperimentReport r;
  r.preset = doc.at("preset").get<std::string>();
  r.config = parse_config(doc.at("config").dump());
  r.seed = doc.at("seed").get<std::uint64_t>();
  r.generator = doc.at("generator").get<std::string>();
  r.sweeps = doc.at("sweeps").get<double>();
  r.gini = read_real(doc, "gini");
  r.entropy = read_real(doc, "entropy");
  r.gamma_shape = read_real(doc, "gamma_shape");
  r.ks_vs_gibbs = read_real(doc, "ks_vs_gibbs");
  if (!doc.at("tail").is_null()) r.tail = tail_from_json(doc.at("tail"));
  if (!doc.at("steady_state").is_null()) r.steady_state = doc.at("steady_state").get<bool>();
  r.histogram_file = doc.at("histogram_file").get<std::string>();
  r.ccdf_file = doc.at("ccdf_file").get<std::string>();
  r.wall_time_s = doc.at("wall_time_s").get<double>();
  for (const auto& [k, v] : doc.at("metrics").items()) {
    r.metrics[k] = v.is_null() ? kNaN : v.get<double>();
  }
  for (const auto& c : doc.at("checks")) {
    r.checks.push_back(Check{c.at("name").get<std::string>(), read_real(c, "value"),
                             c.at("threshold").get<double>(), c.at("relation").get<std::string>(),
                             c.at("passed").get<bool>()});
  }
  return r;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "bin_left,bin_right,count,density\n";
  for (std::size_t i = 0; i < h.bins(); ++i) {
    out += fmt17(h.edges[i]);
    out += ',';
    out += fmt17(h.edges[i + 1]);
    out += ',';
    out += std::to_string(h.counts[i]);
    out += ',';
    out += fmt17(h.density(i));
    out += '\n';
  }
  return out;
}

std::string ccdf_csv(std::span<const CcdfPoint> points) {
  std::string out = "value,tail_prob\n";
  for (const auto& p : points) {
    out += fmt17(p.value);
    out += ',';
    out += fmt17(p.tail_prob);
    out += '\n';
  }
  return out;
}

EmittedFiles emit_csv(ExperimentReport& report, const Histogram& h,
                      std::span<const CcdfPoint> ccdf, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir, "cannot create output directory");

  EmittedFiles files{out_dir / "histogram.csv", out_dir / "ccdf.csv", out_dir / "report.json"};
  report.histogram_file = files.histogram.string();
  report.ccdf_file = files.ccdf.string();
  write_file(files.histogram, histogram_csv(h));
  write_file(files.ccdf, ccdf_csv(ccdf));
  write_file(files.report, to_json(report));
  return files;
}

ExperimentReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return report_from_json(buf.str());
}

}  // namespace kinex
