#include "kinex/config.hpp"

#include <charconv>
#include <set>

#include "json.hpp"
#include "kinex/errors.hpp"

namespace kinex {
namespace {

using nlohmann::json;

const std::set<std::string, std::less<>> kKnownKeys = {
    "model",   "n_agents",      "total_money", "n_exchanges", "seed",   "saving",
    "saving_law", "burn_in",    "measure_every", "ensemble",  "initial"};

std::uint64_t get_count(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(key, std::string("key '") + key + "' must be an integer");
  }
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto signed_value = v.get<std::int64_t>();
  if (signed_value < 0) {
    throw ConfigError(key, std::string("key '") + key + "' must be non-negative");
  }
  return static_cast<std::uint64_t>(signed_value);
}

double get_real(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key, std::string("key '") + key + "' must be a number");
  return v.get<double>();
}

std::string get_string(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_string()) throw ConfigError(key, std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

void require(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ConfigError(key, std::string("missing required key '") + key + "'");
  }
}

Model parse_model(const std::string& name) {
  if (name == "gibbs") return Model::Gibbs;
  if (name == "cc") return Model::UniformSave;
  if (name == "ccm") return Model::MixedSave;
  if (name == "gas") return Model::Gas;
  throw ConfigError("model", "key 'model' must be one of gibbs, cc, ccm, gas; got '" + name + "'");
}

double parse_saving(const json& doc) {
  const double lambda = get_real(doc, "saving");
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw ConfigError("saving", "saving must lie in [0,1)");
  }
  return lambda;
}

DistributedSaving parse_saving_law(const json& doc) {
  const auto& law = doc.at("saving_law");
  if (!law.is_object() || law.size() != 1 || !law.contains("uniform")) {
    throw ConfigError("saving_law", "key 'saving_law' must be {\"uniform\": [low, high]}");
  }
  const auto& bounds = law.at("uniform");
  if (!bounds.is_array() || bounds.size() != 2 || !bounds[0].is_number() ||
      !bounds[1].is_number()) {
    throw ConfigError("saving_law", "key 'saving_law' uniform bounds must be [low, high]");
  }
  DistributedSaving d{bounds[0].get<double>(), bounds[1].get<double>()};
  if (!(d.low >= 0.0 && d.high <= 1.0 && d.low < d.high)) {
    throw ConfigError("saving_law", "saving_law bounds must satisfy 0 <= low < high <= 1");
  }
  return d;
}

SimConfig from_document(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!kKnownKeys.contains(key)) throw ConfigError(key, "unknown key '" + key + "'");
  }
  for (const char* key : {"model", "n_agents", "total_money", "n_exchanges", "seed"}) {
    require(doc, key);
  }

  SimConfig c;
  c.model = parse_model(get_string(doc, "model"));
  c.n_agents = get_count(doc, "n_agents");
  if (c.n_agents < 2) throw ConfigError("n_agents", "n_agents must be at least 2");
  c.total_money = get_real(doc, "total_money");
  if (!(c.total_money > 0.0)) throw ConfigError("total_money", "total_money must be positive");
  c.n_exchanges = get_count(doc, "n_exchanges");
  c.seed = get_count(doc, "seed");

  // Range errors come before model/spec consistency errors.
  const bool has_saving = doc.contains("saving");
  const bool has_law = doc.contains("saving_law");
  const double lambda = has_saving ? parse_saving(doc) : 0.0;
  const auto law = has_law ? parse_saving_law(doc) : DistributedSaving{};

  switch (c.model) {
    case Model::Gibbs:
    case Model::Gas:
      if (has_law) throw ConfigError("saving_law", "saving_law requires model 'ccm'");
      if (has_saving && lambda != 0.0) {
        throw ConfigError("saving", "nonzero saving requires model 'cc'");
      }
      c.saving = NoSaving{};
      break;
    case Model::UniformSave:
      if (!has_saving) throw ConfigError("saving", "missing required key 'saving' for model 'cc'");
      if (has_law) throw ConfigError("saving_law", "saving_law requires model 'ccm'");
      c.saving = UniformSaving{lambda};
      break;
    case Model::MixedSave:
      if (!has_law) {
        throw ConfigError("saving_law", "missing required key 'saving_law' for model 'ccm'");
      }
      if (has_saving) throw ConfigError("saving", "model 'ccm' takes saving_law, not saving");
      c.saving = law;
      break;
  }

  c.burn_in = doc.contains("burn_in") ? get_count(doc, "burn_in")
                                      : std::min(10 * c.n_agents, c.n_exchanges);
  c.measure_every = doc.contains("measure_every") ? get_count(doc, "measure_every") : c.n_agents;
  c.ensemble = doc.contains("ensemble") ? get_count(doc, "ensemble") : 1;
  if (doc.contains("initial")) {
    const auto initial = get_string(doc, "initial");
    if (initial == "equal") {
      c.initial = InitialAllocation::Equal;
    } else if (initial == "concentrated") {
      c.initial = InitialAllocation::Concentrated;
    } else {
      throw ConfigError("initial", "key 'initial' must be 'equal' or 'concentrated'");
    }
  }

  if (c.burn_in > c.n_exchanges) throw ConfigError("burn_in", "burn_in must not exceed n_exchanges");
  if (c.measure_every < 1) throw ConfigError("measure_every", "measure_every must be at least 1");
  if (c.ensemble < 1) throw ConfigError("ensemble", "ensemble must be at least 1");
  return c;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
}

json override_value(const std::string& raw) {
  try {
    return json::parse(raw);
  } catch (const json::parse_error&) {
    return json(raw);
  }
}

}  // namespace

SimConfig parse_config(std::string_view json_text) { return from_document(parse_document(json_text)); }

SimConfig parse_config(std::string_view json_text, const Overrides& overrides) {
  auto doc = parse_document(json_text);
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  for (const auto& [key, value] : overrides) {
    doc[key] = override_value(value);
    // A saving override on a model change drops the stale counterpart.
    if (key == "saving") doc.erase("saving_law");
    if (key == "saving_law") doc.erase("saving");
  }
  return from_document(doc);
}

std::string to_json(const SimConfig& c) {
  json doc;
  doc["model"] = std::string(to_string(c.model));
  doc["n_agents"] = c.n_agents;
  doc["total_money"] = c.total_money;
  doc["n_exchanges"] = c.n_exchanges;
  doc["seed"] = c.seed;
  if (const auto* u = std::get_if<UniformSaving>(&c.saving)) {
    doc["saving"] = u->lambda;
  } else if (const auto* d = std::get_if<DistributedSaving>(&c.saving)) {
    doc["saving_law"] = {{"uniform", {d->low, d->high}}};
  }
  doc["burn_in"] = c.burn_in;
  doc["measure_every"] = c.measure_every;
  doc["ensemble"] = c.ensemble;
  doc["initial"] = c.initial == InitialAllocation::Equal ? "equal" : "concentrated";
  return doc.dump(2);
}

std::pair<std::string, std::string> parse_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError(std::string(text), "override must look like key=value: '" +
                                             std::string(text) + "'");
  }
  return {std::string(text.substr(0, eq)), std::string(text.substr(eq + 1))};
}

std::uint64_t resolve_seed(std::uint64_t file_seed, std::optional<std::string> env_value,
                           std::optional<std::uint64_t> flag_value) {
  if (flag_value) return *flag_value;
  if (env_value && !env_value->empty()) {
    std::uint64_t seed = 0;
    const auto* first = env_value->data();
    const auto* last = first + env_value->size();
    const auto [ptr, ec] = std::from_chars(first, last, seed);
    if (ec != std::errc{} || ptr != last) {
      throw ConfigError("KINEX_SEED", "KINEX_SEED must be a non-negative integer");
    }
    return seed;
  }
  return file_seed;
}

}  // namespace kinex
