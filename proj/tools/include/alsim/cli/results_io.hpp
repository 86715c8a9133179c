#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "alsim/cli/config.hpp"
#include "alsim/simulation.hpp"

namespace alsim::cli {

inline constexpr std::string_view kResultsHeader =
    "family,aur_param,strategy,alpha,beta,seed,query_index,known_size,test_accuracy";
inline constexpr std::string_view kSummaryHeader =
    "family,aur_param,strategy,alpha,beta,seeds,final_mean_accuracy,final_std_accuracy";

/// Shortest decimal text that round-trips the double.
std::string format_number(double value);

/// One row per (seed, strategy, query), seed-major. Accuracy to 4 decimals;
/// alpha/beta are empty for non-bellcurve strategies.
void write_results_csv(std::ostream& out, const ExperimentResult& result);

/// Final-query mean/std per strategy, one row each (no header).
void write_summary_rows(std::ostream& out, const ExperimentResult& result);

/// Full-precision runs and aggregated curves.
nlohmann::json results_json(const ExperimentResult& result);

/// Resolved config plus provenance; feeding this file back through --config
/// replays the run.
nlohmann::json metadata_json(std::string_view command, const nlohmann::json& resolved,
                             const std::vector<std::uint64_t>& seeds);

struct ResultRow {
  std::string family;
  double aur_param = 0.0;
  std::string strategy;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::uint64_t seed = 0;
  std::size_t query_index = 0;
  std::size_t known_size = 0;
  double test_accuracy = 0.0;
};

/// Parses a results CSV. Throws ConfigError if the header is wrong, a row is
/// malformed, or there are no data rows.
std::vector<ResultRow> read_results_csv(std::istream& in);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Creates `dir` (and parents) if missing. Throws IoError.
void ensure_directory(const std::filesystem::path& dir);

} // namespace alsim::cli
