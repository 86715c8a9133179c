#include "alsim/cli/results_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "alsim/cli/errors.hpp"
#include "alsim/cli/version.hpp"

namespace alsim::cli {

using nlohmann::json;

namespace {

std::string shape_field(const QueryStrategy& strategy, double value) {
  return strategy.kind == StrategyKind::bellcurve ? format_number(value) : std::string();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_field(std::string_view text, std::size_t line_no, std::string_view column) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(fmt::format("results CSV line {}: bad {} value '{}'", line_no, column, text));
  }
  return value;
}

} // namespace

std::string format_number(double value) { return fmt::format("{}", value); }

void write_results_csv(std::ostream& out, const ExperimentResult& result) {
  out << kResultsHeader << '\n';
  for (std::size_t k = 0; k < result.seeds.size(); ++k) {
    for (std::size_t s = 0; s < result.strategies.size(); ++s) {
      const auto& run = result.run(k, s);
      const auto& strategy = result.strategies[s];
      const auto& gen = run.config.generator;
      const auto prefix =
          fmt::format("{},{},{},{},{},{}", to_string(gen.family), format_number(gen.aur_param),
                      to_string(strategy.kind), shape_field(strategy, strategy.shape.alpha),
                      shape_field(strategy, strategy.shape.beta), result.seeds[k]);
      for (const auto& record : run.records) {
        fmt::print(out, "{},{},{},{:.4f}\n", prefix, record.query_index, record.known_size,
                   record.test_accuracy);
      }
    }
  }
}

void write_summary_rows(std::ostream& out, const ExperimentResult& result) {
  for (std::size_t s = 0; s < result.strategies.size(); ++s) {
    const auto& strategy = result.strategies[s];
    const auto& gen = result.run(0, s).config.generator;
    const auto& last = result.curves[s].points.back();
    fmt::print(out, "{},{},{},{},{},{},{:.4f},{:.4f}\n", to_string(gen.family),
               format_number(gen.aur_param), to_string(strategy.kind),
               shape_field(strategy, strategy.shape.alpha),
               shape_field(strategy, strategy.shape.beta), result.seeds.size(),
               last.mean_accuracy, last.std_accuracy);
  }
}

json results_json(const ExperimentResult& result) {
  json runs = json::array();
  for (std::size_t k = 0; k < result.seeds.size(); ++k) {
    for (std::size_t s = 0; s < result.strategies.size(); ++s) {
      const auto& run = result.run(k, s);
      json records = json::array();
      for (const auto& r : run.records) {
        records.push_back({{"query_index", r.query_index},
                           {"known_size", r.known_size},
                           {"test_accuracy", r.test_accuracy},
                           {"selected_p_hats", r.selected_p_hats}});
      }
      runs.push_back({{"seed", result.seeds[k]},
                      {"strategy", result.strategies[s].label()},
                      {"records", std::move(records)}});
    }
  }
  json curves = json::array();
  for (const auto& curve : result.curves) {
    json points = json::array();
    for (const auto& p : curve.points) {
      points.push_back({{"query_index", p.query_index},
                        {"known_size", p.known_size},
                        {"mean_accuracy", p.mean_accuracy},
                        {"std_accuracy", p.std_accuracy},
                        {"runs", p.runs}});
    }
    curves.push_back({{"strategy", curve.strategy.label()}, {"points", std::move(points)}});
  }
  return {{"runs", std::move(runs)}, {"curves", std::move(curves)}};
}

json metadata_json(std::string_view command, const json& resolved,
                   const std::vector<std::uint64_t>& seeds) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"config", resolved},
          {"seeds", seeds},
          {"aggregation", "per-query mean and sample standard deviation of test accuracy "
                          "across seeds"}};
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("results CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kResultsHeader) {
    throw ConfigError(fmt::format("results CSV header mismatch: expected '{}'", kResultsHeader));
  }

  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 9) {
      throw ConfigError(fmt::format("results CSV line {}: expected 9 fields, got {}", line_no,
                                    fields.size()));
    }
    ResultRow row;
    row.family = std::string(fields[0]);
    row.aur_param = parse_field<double>(fields[1], line_no, "aur_param");
    row.strategy = std::string(fields[2]);
    if (!fields[3].empty()) row.alpha = parse_field<double>(fields[3], line_no, "alpha");
    if (!fields[4].empty()) row.beta = parse_field<double>(fields[4], line_no, "beta");
    row.seed = parse_field<std::uint64_t>(fields[5], line_no, "seed");
    row.query_index = parse_field<std::size_t>(fields[6], line_no, "query_index");
    row.known_size = parse_field<std::size_t>(fields[7], line_no, "known_size");
    row.test_accuracy = parse_field<double>(fields[8], line_no, "test_accuracy");
    if (row.test_accuracy < 0.0 || row.test_accuracy > 1.0) {
      throw ConfigError(fmt::format("results CSV line {}: accuracy outside [0, 1]", line_no));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("results CSV has no data rows");
  return rows;
}

void ensure_directory(const std::filesystem::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError(fmt::format("cannot create directory '{}': {}", dir.string(),
                              ec ? ec.message() : "not a directory"));
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  ensure_directory(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

} // namespace alsim::cli
