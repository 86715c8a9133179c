#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "alsim/cli/config.hpp"

namespace alsim::cli {

/// Runs one dataset cell over all seeds and strategies and writes
/// results.csv, metadata.json and, if requested, results.json and
/// learning_curve.svg into `out_dir`. Returns an exit code.
int cmd_simulate(const nlohmann::json& resolved, const std::filesystem::path& out_dir,
                 std::ostream& log);

/// Runs every (family, aur) cell of the grid. Each cell gets
/// out_dir/cells/<family>_<aur>/ with the same files as simulate; the
/// final-query mean per (cell, strategy) goes to out_dir/summary.csv.
int cmd_sweep(const nlohmann::json& resolved, const std::filesystem::path& out_dir,
              std::ostream& log);

/// Prints the bell-curve interval table.
int cmd_table1(std::ostream& out);

/// Renders learning curves from a results CSV into an SVG file.
int cmd_plot(const std::filesystem::path& results_csv, const std::filesystem::path& out_svg,
             std::ostream& log);

/// Writes a generated population as CSV.
int cmd_dataset(const nlohmann::json& resolved, std::size_t population,
                const std::filesystem::path& out_csv, std::ostream& log);

/// Full command-line front end. Diagnostics go to `err`; exit codes are 0
/// success, 1 configuration/input error, 2 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace alsim::cli
