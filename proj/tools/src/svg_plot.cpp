#include "alsim/cli/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <tuple>

#include <fmt/format.h>

namespace alsim::cli {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
};

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    case '\'': out += "&apos;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string strategy_name(const std::string& strategy, const std::optional<double>& alpha,
                          const std::optional<double>& beta) {
  if (!alpha || !beta) return strategy;
  return fmt::format("{}({},{})", strategy, format_number(*alpha), format_number(*beta));
}

} // namespace

std::vector<CurveSeries> series_from_rows(std::span<const ResultRow> rows) {
  using Key = std::tuple<std::string, double, std::string>;
  std::vector<Key> order;
  std::map<Key, std::map<std::size_t, std::vector<double>>> values;
  std::map<std::pair<std::string, double>, bool> cells;

  for (const auto& row : rows) {
    Key key{row.family, row.aur_param, strategy_name(row.strategy, row.alpha, row.beta)};
    if (!values.contains(key)) order.push_back(key);
    values[key][row.query_index].push_back(row.test_accuracy);
    cells[{row.family, row.aur_param}] = true;
  }

  const bool multi_cell = cells.size() > 1;
  std::vector<CurveSeries> out;
  for (const auto& key : order) {
    const auto& [family, aur, name] = key;
    CurveSeries series;
    series.name = multi_cell ? fmt::format("{} {} {}", family, format_number(aur), name) : name;
    for (auto& [query, accs] : values[key]) {
      std::sort(accs.begin(), accs.end());
      double sum = 0.0;
      for (double a : accs) sum += a;
      const double mean = sum / static_cast<double>(accs.size());
      double squares = 0.0;
      for (double a : accs) squares += (a - mean) * (a - mean);
      series.query_index.push_back(static_cast<double>(query));
      series.mean.push_back(mean);
      series.std_dev.push_back(accs.size() > 1
                                   ? std::sqrt(squares / static_cast<double>(accs.size() - 1))
                                   : 0.0);
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<CurveSeries> series_from_result(const ExperimentResult& result) {
  std::vector<CurveSeries> out;
  for (const auto& curve : result.curves) {
    CurveSeries series;
    series.name = curve.strategy.label();
    for (const auto& p : curve.points) {
      series.query_index.push_back(static_cast<double>(p.query_index));
      series.mean.push_back(p.mean_accuracy);
      series.std_dev.push_back(p.std_accuracy);
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::string render_learning_curves(std::span<const CurveSeries> series,
                                   const PlotOptions& options) {
  const double left = 64.0;
  const double right = 190.0;
  const double top = 40.0;
  const double bottom = 52.0;
  const double plot_w = options.width - left - right;
  const double plot_h = options.height - top - bottom;

  double x_max = 1.0;
  double y_lo = 1.0;
  double y_hi = 0.0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.mean.size(); ++i) {
      x_max = std::max(x_max, s.query_index[i]);
      y_lo = std::min(y_lo, s.mean[i] - s.std_dev[i]);
      y_hi = std::max(y_hi, s.mean[i] + s.std_dev[i]);
    }
  }
  if (y_lo > y_hi) {
    y_lo = 0.0;
    y_hi = 1.0;
  }
  y_lo = std::clamp(std::floor(y_lo * 20.0) / 20.0, 0.0, 1.0);
  y_hi = std::clamp(std::ceil(y_hi * 20.0) / 20.0, 0.0, 1.0);
  if (y_hi - y_lo < 0.05) {
    y_lo = std::max(0.0, y_hi - 0.05);
    y_hi = std::min(1.0, y_lo + 0.05);
  }

  const auto px = [&](double x) { return left + plot_w * x / x_max; };
  const auto py = [&](double y) {
    const double c = std::clamp(y, y_lo, y_hi);
    return top + plot_h * (1.0 - (c - y_lo) / (y_hi - y_lo));
  };

  std::string svg;
  svg += fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      options.width, options.height);
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
                     options.width, options.height);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                     left + plot_w / 2.0, escape_xml(options.title));

  // Grid and ticks.
  svg += "<g class=\"axes\" stroke=\"#999\" stroke-width=\"1\">\n";
  const int y_ticks = 5;
  for (int i = 0; i <= y_ticks; ++i) {
    const double v = y_lo + (y_hi - y_lo) * i / y_ticks;
    svg += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" "
                       "stroke=\"#e5e5e5\"/>\n",
                       left, py(v), left + plot_w, py(v));
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" stroke=\"none\" "
                       "fill=\"#333\">{:.2f}</text>\n",
                       left - 6.0, py(v) + 4.0, v);
  }
  const int x_step = std::max(1, static_cast<int>(std::ceil(x_max / 10.0)));
  for (int q = 0; q <= static_cast<int>(x_max); q += x_step) {
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" stroke=\"none\" "
                       "fill=\"#333\">{}</text>\n",
                       px(q), top + plot_h + 16.0, q);
  }
  svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" "
                     "stroke=\"#333\"/>\n",
                     left, top + plot_h, left + plot_w);
  svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" "
                     "stroke=\"#333\"/>\n",
                     left, top, top + plot_h);
  svg += "</g>\n";
  svg += fmt::format("<text class=\"x-label\" x=\"{:.1f}\" y=\"{:.1f}\" "
                     "text-anchor=\"middle\">Query</text>\n",
                     left + plot_w / 2.0, static_cast<double>(options.height) - 12.0);
  svg += fmt::format("<text class=\"y-label\" x=\"16\" y=\"{0:.1f}\" text-anchor=\"middle\" "
                     "transform=\"rotate(-90 16 {0:.1f})\">Test accuracy (mean &#177; 1 sd)</text>\n",
                     top + plot_h / 2.0);

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& curve = series[s];
    const char* color = kPalette[s % kPalette.size()];
    std::string band;
    for (std::size_t i = 0; i < curve.mean.size(); ++i) {
      band += fmt::format("{:.2f},{:.2f} ", px(curve.query_index[i]),
                          py(curve.mean[i] + curve.std_dev[i]));
    }
    for (std::size_t i = curve.mean.size(); i-- > 0;) {
      band += fmt::format("{:.2f},{:.2f} ", px(curve.query_index[i]),
                          py(curve.mean[i] - curve.std_dev[i]));
    }
    std::string line;
    for (std::size_t i = 0; i < curve.mean.size(); ++i) {
      line += fmt::format("{:.2f},{:.2f} ", px(curve.query_index[i]), py(curve.mean[i]));
    }
    if (!band.empty()) band.pop_back();
    if (!line.empty()) line.pop_back();
    svg += fmt::format("<polygon class=\"band\" points=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" "
                       "stroke=\"none\"/>\n",
                       band, color);
    svg += fmt::format("<polyline class=\"series\" data-name=\"{}\" points=\"{}\" fill=\"none\" "
                       "stroke=\"{}\" stroke-width=\"2\"/>\n",
                       escape_xml(curve.name), line, color);
  }

  svg += "<g class=\"legend\">\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double y = top + 10.0 + 20.0 * static_cast<double>(s);
    const double x = left + plot_w + 16.0;
    svg += fmt::format("<g class=\"legend-entry\"><line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" "
                       "y2=\"{:.1f}\" stroke=\"{}\" stroke-width=\"3\"/><text x=\"{:.1f}\" "
                       "y=\"{:.1f}\">{}</text></g>\n",
                       x, y, x + 22.0, y, kPalette[s % kPalette.size()], x + 28.0, y + 4.0,
                       escape_xml(series[s].name));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

} // namespace alsim::cli
