#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alsim/simulation.hpp"

namespace alsim::cli {

/// Keys accepted in a config file or via --set. Flat, mirroring
/// SimulationConfig plus experiment-level settings (strategies, seeds,
/// formats, sweep grid).
const std::vector<std::string>& valid_config_keys();

/// Built-in defaults for every key.
nlohmann::json default_config();

/// Reads a JSON config. A metadata file written by `simulate` or `sweep`
/// (object with a "config" member) is accepted and unwrapped, so runs can be
/// replayed from their metadata alone. Throws ConfigError.
nlohmann::json load_config_file(const std::filesystem::path& path);

/// Overlays `overrides` onto `base` after checking every key is known.
void merge_config(nlohmann::json& base, const nlohmann::json& overrides);

/// Parses `key=value` with the value typed after the key's default.
/// Throws ConfigError for unknown keys or unparsable values.
void apply_override(nlohmann::json& config, std::string_view assignment);

/// Rewrites comma-separated strings in list-valued keys (strategies, alpha,
/// beta, formats) as JSON arrays so the echoed config is canonical.
void normalize_config(nlohmann::json& config);

/// Median grid point per family, used when "aur" is null.
double default_aur(Family family) noexcept;

/// Classification {2.0, 0.8, 0.3}, blobs {1, 3, 5}, circles {0.5, 0.8, 0.9},
/// moons {0.1, 0.2, 0.3}.
nlohmann::json default_grid();

struct OutputFormats {
  bool csv = true;
  bool json = false;
  bool svg = false;
};

/// Typed view of a resolved config for one dataset cell.
struct ExperimentPlan {
  SimulationConfig base;
  std::vector<QueryStrategy> strategies;
  std::vector<std::uint64_t> seeds;
  std::size_t threads = 0;
  OutputFormats formats;
};

/// Validates the resolved config and converts it. The second overload takes
/// the dataset cell explicitly (sweeps). Throws ConfigError.
ExperimentPlan make_plan(const nlohmann::json& config);
ExperimentPlan make_plan(const nlohmann::json& config, Family family, double aur);

/// (family, aur list) pairs from the "grid" key, restricted by "family" when
/// it is a non-null string or array. Throws ConfigError.
std::vector<std::pair<Family, std::vector<double>>> make_grid(const nlohmann::json& config);

} // namespace alsim::cli
