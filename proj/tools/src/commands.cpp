#include "alsim/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "alsim/cli/errors.hpp"
#include "alsim/cli/results_io.hpp"
#include "alsim/cli/svg_plot.hpp"
#include "alsim/cli/table1.hpp"
#include "alsim/cli/version.hpp"

namespace alsim::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfig;
  } catch (const IoError& e) {
    fmt::print(err, "I/O error: {}\n", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfig;
  } catch (const std::domain_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfig;
  }
}

std::string render(const auto& writer) {
  std::ostringstream buffer;
  writer(buffer);
  return buffer.str();
}

void write_cell_outputs(const fs::path& dir, const ExperimentPlan& plan,
                        const ExperimentResult& result, std::string_view command,
                        const json& resolved) {
  write_text_file(dir / "results.csv",
                  render([&](std::ostream& o) { write_results_csv(o, result); }));
  write_text_file(dir / "metadata.json",
                  metadata_json(command, resolved, plan.seeds).dump(2) + "\n");
  if (plan.formats.json) write_text_file(dir / "results.json", results_json(result).dump(2) + "\n");
  if (plan.formats.svg) {
    const auto series = series_from_result(result);
    PlotOptions options;
    options.title = fmt::format("{} (aur {}), {} seeds", to_string(plan.base.generator.family),
                                format_number(plan.base.generator.aur_param), plan.seeds.size());
    write_text_file(dir / "learning_curve.svg", render_learning_curves(series, options));
  }
}

void log_final(std::ostream& log, const ExperimentResult& result) {
  for (const auto& curve : result.curves) {
    const auto& last = curve.points.back();
    fmt::print(log, "  {:<20} final accuracy {:.4f} +/- {:.4f} (known {})\n",
               curve.strategy.label(), last.mean_accuracy, last.std_accuracy, last.known_size);
  }
}

std::string cell_directory_name(Family family, double aur) {
  return fmt::format("{}_aur{}", to_string(family), format_number(aur));
}

} // namespace

int cmd_simulate(const json& resolved, const fs::path& out_dir, std::ostream& log) {
  const auto plan = make_plan(resolved);
  ensure_directory(out_dir);
  const auto result = run_experiment(plan.base, plan.seeds, plan.strategies, plan.threads);
  write_cell_outputs(out_dir, plan, result, "simulate", resolved);
  fmt::print(log, "{} (aur {}): {} seeds x {} strategies -> {}\n",
             to_string(plan.base.generator.family), format_number(plan.base.generator.aur_param),
             plan.seeds.size(), plan.strategies.size(), (out_dir / "results.csv").string());
  log_final(log, result);
  return kExitOk;
}

int cmd_sweep(const json& resolved, const fs::path& out_dir, std::ostream& log) {
  const auto grid = make_grid(resolved);
  std::vector<std::pair<Family, double>> cells;
  for (const auto& [family, aurs] : grid) {
    for (double aur : aurs) cells.emplace_back(family, aur);
  }
  std::vector<ExperimentPlan> plans;
  for (const auto& [family, aur] : cells) plans.push_back(make_plan(resolved, family, aur));

  ensure_directory(out_dir);
  std::ostringstream summary;
  summary << kSummaryHeader << '\n';
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& plan = plans[c];
    const auto result = run_experiment(plan.base, plan.seeds, plan.strategies, plan.threads);
    const auto dir = out_dir / "cells" / cell_directory_name(cells[c].first, cells[c].second);
    write_cell_outputs(dir, plan, result, "sweep", resolved);
    write_summary_rows(summary, result);
    fmt::print(log, "[{}/{}] {} (aur {})\n", c + 1, cells.size(), to_string(cells[c].first),
               format_number(cells[c].second));
    log_final(log, result);
  }
  write_text_file(out_dir / "summary.csv", summary.str());
  write_text_file(out_dir / "metadata.json",
                  metadata_json("sweep", resolved, plans.front().seeds).dump(2) + "\n");
  fmt::print(log, "{} cells -> {}\n", cells.size(), (out_dir / "summary.csv").string());
  return kExitOk;
}

int cmd_table1(std::ostream& out) {
  print_shape_interval_table(out, shape_interval_table());
  return kExitOk;
}

int cmd_plot(const fs::path& results_csv, const fs::path& out_svg, std::ostream& log) {
  std::ifstream in(results_csv);
  if (!in) throw ConfigError(fmt::format("cannot read results CSV '{}'", results_csv.string()));
  const auto rows = read_results_csv(in);
  const auto series = series_from_rows(rows);
  PlotOptions options;
  options.title = fmt::format("Learning curves: {}", results_csv.filename().string());
  write_text_file(out_svg, render_learning_curves(series, options));
  fmt::print(log, "{} series -> {}\n", series.size(), out_svg.string());
  return kExitOk;
}

int cmd_dataset(const json& resolved, std::size_t population, const fs::path& out_csv,
                std::ostream& log) {
  const auto plan = make_plan(resolved);
  GeneratorConfig generator = plan.base.generator;
  generator.population_size = population;
  generator.seed = plan.base.seed;
  std::vector<LabeledInstance> instances;
  try {
    instances = generate_population(generator);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  write_text_file(out_csv,
                  render([&](std::ostream& o) { write_dataset_csv(o, instances); }));
  fmt::print(log, "{} {} instances -> {}\n", instances.size(), to_string(generator.family),
             out_csv.string());
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pool-based active learning simulator: passive, uncertainty and bell-curve "
               "sampling on synthetic datasets"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  struct ExperimentFlags {
    std::string config_path;
    std::string seed, seeds, family, aur, strategy, alpha, beta, model, format, threads;
    std::vector<std::string> sets;
    std::string out_dir = "alsim-out";
  };
  ExperimentFlags flags;

  const auto add_experiment_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config_path, "JSON config (or a metadata.json to replay)");
    cmd->add_option("--seed", flags.seed, "First seed (u64)");
    cmd->add_option("--seeds", flags.seeds, "Number of consecutive seeds");
    cmd->add_option("--family", flags.family, "classification|blobs|circles|moons (sweep: list)");
    cmd->add_option("--aur", flags.aur, "Family parameter controlling class overlap (sweep: list)");
    cmd->add_option("--strategy", flags.strategy, "Comma list of passive,uncertainty,bellcurve");
    cmd->add_option("--alpha", flags.alpha, "Bell-curve alpha (comma list for a shape grid)");
    cmd->add_option("--beta", flags.beta, "Bell-curve beta (defaults to alpha)");
    cmd->add_option("--model", flags.model, "knn|logistic");
    cmd->add_option("--format", flags.format, "Comma list of csv,json,svg");
    cmd->add_option("--threads", flags.threads, "Worker threads (0 = hardware)");
    cmd->add_option("--set", flags.sets, "Extra key=value overrides")->take_all();
    cmd->add_option("--out", flags.out_dir, "Output directory");
  };

  auto* simulate = app.add_subcommand("simulate", "Run one dataset cell over seeds and strategies");
  add_experiment_flags(simulate);
  auto* sweep = app.add_subcommand("sweep", "Run a grid of dataset cells");
  add_experiment_flags(sweep);
  auto* table = app.add_subcommand("table1", "Print central intervals of symmetric beta shapes");

  std::string plot_in;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "Render an SVG learning-curve chart from results.csv");
  plot->add_option("results_csv", plot_in, "Results CSV")->required();
  plot->add_option("out_svg", plot_out, "Output SVG")->required();

  std::size_t dataset_size = 2010;
  std::string dataset_out = "dataset.csv";
  auto* dataset = app.add_subcommand("dataset", "Dump a generated population as CSV");
  add_experiment_flags(dataset);
  dataset->add_option("--size", dataset_size, "Population size (even)");
  dataset->add_option("--csv", dataset_out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfig;
  }

  const auto resolve = [&](bool sweep_defaults) {
    json resolved = default_config();
    if (sweep_defaults) resolved["family"] = nullptr;
    if (!flags.config_path.empty()) merge_config(resolved, load_config_file(flags.config_path));
    const std::pair<const char*, const std::string*> mapped[] = {
        {"seed", &flags.seed},       {"seeds", &flags.seeds},   {"family", &flags.family},
        {"aur", &flags.aur},         {"strategies", &flags.strategy}, {"alpha", &flags.alpha},
        {"beta", &flags.beta},       {"model", &flags.model},   {"formats", &flags.format},
        {"threads", &flags.threads},
    };
    for (const auto& [key, value] : mapped) {
      if (!value->empty()) apply_override(resolved, std::string(key) + "=" + *value);
    }
    for (const auto& assignment : flags.sets) apply_override(resolved, assignment);
    normalize_config(resolved);
    return resolved;
  };

  return guarded(err, [&] {
    if (simulate->parsed()) return cmd_simulate(resolve(false), flags.out_dir, err);
    if (sweep->parsed()) return cmd_sweep(resolve(true), flags.out_dir, err);
    if (table->parsed()) return cmd_table1(out);
    if (plot->parsed()) return cmd_plot(plot_in, plot_out, err);
    if (dataset->parsed()) return cmd_dataset(resolve(false), dataset_size, dataset_out, err);
    return kExitConfig;
  });
}

} // namespace alsim::cli
