#include "alsim/cli/config.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "alsim/cli/errors.hpp"

namespace alsim::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    std::string item(text.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

// Anything JSON can parse (numbers, true/false, null, arrays, quoted
// strings) keeps its type; everything else is a bare string.
json parse_scalar(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return json(std::string(text));
  }
}

// Normalises "a,b" strings into arrays for list-valued keys.
json as_list(const json& value) {
  if (value.is_string()) {
    json list = json::array();
    for (auto& item : split_list(value.get<std::string>())) list.push_back(parse_scalar(item));
    return list;
  }
  if (value.is_array() || value.is_null()) return value;
  return json::array({value});
}

template <typename T>
T get_as(const json& config, const char* key) {
  try {
    return config.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config key '{}': {}", key, e.what()));
  }
}

std::size_t get_count(const json& config, const char* key) {
  const auto& value = config.at(key);
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ConfigError(fmt::format("config key '{}' must be a non-negative integer", key));
  }
  return value.get<std::size_t>();
}

double get_real(const json& config, const char* key) {
  const auto& value = config.at(key);
  if (!value.is_number()) throw ConfigError(fmt::format("config key '{}' must be a number", key));
  return value.get<double>();
}

std::vector<double> get_reals(const json& value, const char* key) {
  std::vector<double> out;
  for (const auto& item : as_list(value)) {
    if (!item.is_number()) {
      throw ConfigError(fmt::format("config key '{}' must hold numbers", key));
    }
    out.push_back(item.get<double>());
  }
  return out;
}

std::vector<std::string> get_strings(const json& value, const char* key) {
  std::vector<std::string> out;
  for (const auto& item : as_list(value)) {
    if (!item.is_string()) {
      throw ConfigError(fmt::format("config key '{}' must hold strings", key));
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Family to_family(const std::string& name) {
  try {
    return parse_family(name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

} // namespace

const std::vector<std::string>& valid_config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    const json defaults = default_config();
    for (const auto& [key, value] : defaults.items()) k.push_back(key);
    return k;
  }();
  return keys;
}

json default_grid() {
  return json{{"classification", {2.0, 0.8, 0.3}},
              {"blobs", {1.0, 3.0, 5.0}},
              {"circles", {0.5, 0.8, 0.9}},
              {"moons", {0.1, 0.2, 0.3}}};
}

json default_config() {
  return json{
      {"family", "blobs"},
      {"aur", nullptr},
      {"noise_std", kDefaultCirclesNoise},
      {"strategies", {"passive", "uncertainty", "bellcurve"}},
      {"alpha", {kDefaultBellShape.alpha}},
      {"beta", nullptr},
      {"model", "knn"},
      {"k", 5},
      {"learning_rate", 0.1},
      {"iterations", 500},
      {"l2_lambda", 1e-4},
      {"poly2", "auto"},
      {"known_size", 10},
      {"unknown_size", 1000},
      {"test_size", 1000},
      {"batch_n", 5},
      {"num_queries", 20},
      {"seed", 1},
      {"seeds", 30},
      {"threads", 0},
      {"formats", {"csv"}},
      {"grid", default_grid()},
  };
}

void merge_config(json& base, const json& overrides) {
  if (!overrides.is_object()) throw ConfigError("config must be a JSON object");
  const auto& keys = valid_config_keys();
  for (const auto& [key, value] : overrides.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(fmt::format("unknown config key '{}'; valid keys: {}", key,
                                    fmt::join(keys, ", ")));
    }
    base[key] = value;
  }
}

json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config file '{}'", path.string()));
  json parsed;
  try {
    parsed = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config file '{}' is not valid JSON: {}", path.string(),
                                  e.what()));
  }
  if (parsed.is_object() && parsed.contains("config") && parsed["config"].is_object()) {
    return parsed["config"];
  }
  return parsed;
}

void apply_override(json& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError(fmt::format("override '{}' is not of the form key=value", assignment));
  }
  const std::string key(assignment.substr(0, eq));
  const auto text = assignment.substr(eq + 1);
  const json value = parse_scalar(text);
  // Null, string and list defaults accept several shapes; check the rest here
  // so a typo fails at the flag rather than deep inside make_plan.
  const json defaults = default_config();
  if (const auto it = defaults.find(key); it != defaults.end()) {
    const bool ok = it->is_boolean()          ? value.is_boolean()
                    : it->is_number_integer() ? value.is_number_integer()
                    : it->is_number()         ? value.is_number()
                                              : true;
    if (!ok) {
      throw ConfigError(fmt::format("override '{}': expected a {} value", assignment,
                                    it->is_boolean() ? "boolean" : "numeric"));
    }
  }
  merge_config(config, json{{key, value}});
}

void normalize_config(json& config) {
  for (const char* key : {"strategies", "alpha", "beta", "formats"}) {
    if (config.contains(key) && config[key].is_string()) config[key] = as_list(config[key]);
  }
  for (const char* key : {"family", "aur"}) {
    if (config.contains(key) && config[key].is_string() &&
        config[key].get<std::string>().find(',') != std::string::npos) {
      config[key] = as_list(config[key]);
    }
  }
}

double default_aur(Family family) noexcept {
  switch (family) {
  case Family::classification: return 0.8;
  case Family::blobs: return 3.0;
  case Family::circles: return 0.8;
  case Family::moons: return 0.2;
  }
  return 0.0;
}

ExperimentPlan make_plan(const json& config) {
  const auto& family_value = config.at("family");
  if (!family_value.is_string()) {
    throw ConfigError("config key 'family' must name a single family for this command");
  }
  const Family family = to_family(family_value.get<std::string>());
  const auto& aur_value = config.at("aur");
  double aur = default_aur(family);
  if (!aur_value.is_null()) {
    const auto values = get_reals(aur_value, "aur");
    if (values.size() != 1) throw ConfigError("config key 'aur' must be a single number here");
    aur = values.front();
  }
  return make_plan(config, family, aur);
}

ExperimentPlan make_plan(const json& config, Family family, double aur) {
  ExperimentPlan plan;
  auto& base = plan.base;

  base.generator.family = family;
  base.generator.aur_param = aur;
  base.generator.noise_std = get_real(config, "noise_std");

  try {
    base.model.kind = parse_model_kind(get_as<std::string>(config, "model"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  base.model.knn.k = get_count(config, "k");
  base.model.logistic.learning_rate = get_real(config, "learning_rate");
  base.model.logistic.iterations = get_count(config, "iterations");
  base.model.logistic.l2_lambda = get_real(config, "l2_lambda");
  const auto& poly2 = config.at("poly2");
  if (poly2.is_boolean()) {
    base.model.logistic.poly2 = poly2.get<bool>();
  } else if (poly2.is_string() && poly2.get<std::string>() == "auto") {
    base.model.logistic.poly2 = feature_dimension(family) == 2;
  } else {
    throw ConfigError("config key 'poly2' must be true, false or \"auto\"");
  }

  base.pools.known = get_count(config, "known_size");
  base.pools.unknown = get_count(config, "unknown_size");
  base.pools.test = get_count(config, "test_size");
  base.batch_n = get_count(config, "batch_n");
  base.num_queries = get_count(config, "num_queries");

  const auto alphas = get_reals(config.at("alpha"), "alpha");
  auto betas = get_reals(config.at("beta"), "beta");
  if (betas.empty()) betas = alphas;
  if (alphas.empty()) throw ConfigError("config key 'alpha' must hold at least one value");
  if (alphas.size() != betas.size()) {
    throw ConfigError("config keys 'alpha' and 'beta' must have the same length");
  }

  for (const auto& name : get_strings(config.at("strategies"), "strategies")) {
    StrategyKind kind;
    try {
      kind = parse_strategy_kind(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (kind == StrategyKind::bellcurve) {
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        plan.strategies.push_back(QueryStrategy::bellcurve({alphas[i], betas[i]}));
      }
    } else {
      plan.strategies.push_back({kind, kDefaultBellShape});
    }
  }
  if (plan.strategies.empty()) throw ConfigError("at least one strategy is required");

  const auto& seed_value = config.at("seed");
  if (!seed_value.is_number_integer() && !seed_value.is_number_unsigned()) {
    throw ConfigError("config key 'seed' must be an unsigned integer");
  }
  if (seed_value.is_number_integer() && !seed_value.is_number_unsigned() &&
      seed_value.get<std::int64_t>() < 0) {
    throw ConfigError("config key 'seed' must be non-negative");
  }
  const auto first_seed = seed_value.get<std::uint64_t>();
  const auto seed_count = get_count(config, "seeds");
  if (seed_count == 0) throw ConfigError("config key 'seeds' must be at least 1");
  for (std::size_t i = 0; i < seed_count; ++i) plan.seeds.push_back(first_seed + i);
  base.seed = first_seed;

  plan.threads = get_count(config, "threads");

  plan.formats = {false, false, false};
  for (const auto& f : get_strings(config.at("formats"), "formats")) {
    if (f == "csv") {
      plan.formats.csv = true;
    } else if (f == "json") {
      plan.formats.json = true;
    } else if (f == "svg") {
      plan.formats.svg = true;
    } else {
      throw ConfigError(fmt::format("unknown output format '{}' (expected csv, json, svg)", f));
    }
  }
  // results.csv is the primary artifact and is always written.
  plan.formats.csv = true;

  try {
    for (const auto& strategy : plan.strategies) {
      SimulationConfig probe = base;
      probe.strategy = strategy;
      probe.validate();
    }
    // Exercise generator argument checks on a tiny population.
    GeneratorConfig probe = base.generator;
    probe.population_size = 2;
    (void)generate_population(probe);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return plan;
}

std::vector<std::pair<Family, std::vector<double>>> make_grid(const json& config) {
  const auto& grid = config.at("grid");
  if (!grid.is_object()) throw ConfigError("config key 'grid' must be an object");

  std::vector<Family> wanted;
  const auto& family_value = config.at("family");
  if (!family_value.is_null()) {
    for (const auto& name : get_strings(family_value, "family")) wanted.push_back(to_family(name));
  }
  const bool aur_override = !config.at("aur").is_null();
  const auto aur_values = aur_override ? get_reals(config.at("aur"), "aur") : std::vector<double>{};

  std::vector<std::pair<Family, std::vector<double>>> cells;
  for (auto family : {Family::classification, Family::blobs, Family::circles, Family::moons}) {
    const std::string name(to_string(family));
    const bool listed = std::find(wanted.begin(), wanted.end(), family) != wanted.end();
    if (!wanted.empty() && !listed) continue;
    if (aur_override) {
      cells.emplace_back(family, aur_values);
    } else if (grid.contains(name)) {
      cells.emplace_back(family, get_reals(grid[name], "grid"));
    }
  }
  for (const auto& [key, value] : grid.items()) to_family(key);
  if (cells.empty()) throw ConfigError("sweep grid selects no cells");
  return cells;
}

} // namespace alsim::cli
