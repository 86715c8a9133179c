#pragma once

#include <span>
#include <string>
#include <vector>

#include "alsim/cli/results_io.hpp"
#include "alsim/simulation.hpp"

namespace alsim::cli {

struct CurveSeries {
  std::string name;
  std::vector<double> query_index;
  std::vector<double> mean;
  std::vector<double> std_dev;
};

/// Groups rows by (family, aur, strategy, alpha, beta) in order of first
/// appearance and averages accuracy per query index across seeds. Series
/// names carry the family/aur prefix only when the rows span several cells.
std::vector<CurveSeries> series_from_rows(std::span<const ResultRow> rows);

std::vector<CurveSeries> series_from_result(const ExperimentResult& result);

struct PlotOptions {
  std::string title = "Test accuracy per query";
  int width = 720;
  int height = 440;
};

/// Line chart: x = query index, y = mean accuracy, shaded +/-1 std band per
/// series, legend, labelled axes. y-range is clamped to [0, 1]. Each series
/// is one <polyline class="series">, each legend item one
/// <g class="legend-entry">.
std::string render_learning_curves(std::span<const CurveSeries> series,
                                   const PlotOptions& options = {});

} // namespace alsim::cli
