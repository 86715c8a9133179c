#include "alsim/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace alsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::size_t kWideDimension = 4;
constexpr std::size_t kPlaneDimension = 2;

void require_even(std::size_t n) {
  if (n % 2 != 0) {
    throw std::invalid_argument("population size must be even for exact class balance, got " +
                                std::to_string(n));
  }
}

void require_finite_nonnegative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

} // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
  case Family::classification: return "classification";
  case Family::blobs: return "blobs";
  case Family::circles: return "circles";
  case Family::moons: return "moons";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto family : {Family::classification, Family::blobs, Family::circles, Family::moons}) {
    if (to_string(family) == name) return family;
  }
  throw std::invalid_argument("unknown dataset family '" + std::string(name) +
                              "' (expected classification, blobs, circles or moons)");
}

std::size_t feature_dimension(Family family) noexcept {
  return (family == Family::circles || family == Family::moons) ? kPlaneDimension
                                                                : kWideDimension;
}

DataPool::DataPool(PoolRole role, std::vector<LabeledInstance> instances,
                   std::vector<std::size_t> ids)
    : role_(role), instances_(std::move(instances)), ids_(std::move(ids)) {
  if (instances_.size() != ids_.size()) {
    throw std::invalid_argument("DataPool: instance and id counts differ");
  }
}

std::size_t DataPool::dimension() const noexcept {
  return instances_.empty() ? 0 : instances_.front().features.size();
}

std::span<const double> DataPool::features(std::size_t i) const {
  return instances_.at(i).features;
}

int DataPool::label(std::size_t i) const {
  if (masked()) throw std::logic_error("labels of the unknown pool are masked");
  return instances_.at(i).label;
}

void DataPool::merge(const DataPool& labelled) {
  if (masked() || labelled.masked()) {
    throw std::logic_error("merge requires two pools with visible labels");
  }
  instances_.insert(instances_.end(), labelled.instances_.begin(), labelled.instances_.end());
  ids_.insert(ids_.end(), labelled.ids_.begin(), labelled.ids_.end());
}

std::vector<LabeledInstance> gen_classification(std::size_t n, double class_sep, Rng& rng) {
  require_even(n);
  require_finite_nonnegative(class_sep, "class_sep");
  // Unit all-ones direction in 4-d is (1,1,1,1)/2, so each coordinate of the
  // centroid is (2y - 1) * class_sep / 4.
  std::vector<LabeledInstance> out;
  out.reserve(n);
  for (int label = 0; label <= 1; ++label) {
    const double offset = (2.0 * label - 1.0) * class_sep * 0.25;
    for (std::size_t i = 0; i < n / 2; ++i) {
      LabeledInstance inst{std::vector<double>(kWideDimension), label};
      for (auto& x : inst.features) x = offset + rng.next_normal();
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<LabeledInstance> gen_blobs(std::size_t n, double cluster_std, Rng& rng) {
  require_even(n);
  if (!(cluster_std > 0.0) || !std::isfinite(cluster_std)) {
    throw std::invalid_argument("cluster_std must be finite and > 0");
  }
  constexpr double kBoxLow = -10.0;
  constexpr double kBoxHigh = 10.0;
  double centers[2][kWideDimension];
  for (auto& center : centers) {
    for (auto& c : center) c = kBoxLow + (kBoxHigh - kBoxLow) * rng.next_uniform();
  }
  std::vector<LabeledInstance> out;
  out.reserve(n);
  for (int label = 0; label <= 1; ++label) {
    for (std::size_t i = 0; i < n / 2; ++i) {
      LabeledInstance inst{std::vector<double>(kWideDimension), label};
      for (std::size_t d = 0; d < kWideDimension; ++d) {
        inst.features[d] = centers[label][d] + cluster_std * rng.next_normal();
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<LabeledInstance> gen_circles(std::size_t n, double factor, double noise_std,
                                         Rng& rng) {
  require_even(n);
  if (!(factor > 0.0 && factor < 1.0)) {
    throw std::invalid_argument("circle factor must lie in (0, 1)");
  }
  require_finite_nonnegative(noise_std, "noise_std");
  std::vector<LabeledInstance> out;
  out.reserve(n);
  for (int label = 0; label <= 1; ++label) {
    const double radius = label == 0 ? 1.0 : factor;
    for (std::size_t i = 0; i < n / 2; ++i) {
      const double angle = 2.0 * kPi * rng.next_uniform();
      double x = radius * std::cos(angle);
      double y = radius * std::sin(angle);
      if (noise_std > 0.0) {
        x += noise_std * rng.next_normal();
        y += noise_std * rng.next_normal();
      }
      out.push_back({{x, y}, label});
    }
  }
  return out;
}

std::vector<LabeledInstance> gen_moons(std::size_t n, double noise_std, Rng& rng) {
  require_even(n);
  require_finite_nonnegative(noise_std, "moon noise");
  std::vector<LabeledInstance> out;
  out.reserve(n);
  for (int label = 0; label <= 1; ++label) {
    for (std::size_t i = 0; i < n / 2; ++i) {
      const double t = kPi * rng.next_uniform();
      double x = label == 0 ? std::cos(t) : 1.0 - std::cos(t);
      double y = label == 0 ? std::sin(t) : 0.5 - std::sin(t);
      if (noise_std > 0.0) {
        x += noise_std * rng.next_normal();
        y += noise_std * rng.next_normal();
      }
      out.push_back({{x, y}, label});
    }
  }
  return out;
}

std::vector<LabeledInstance> generate_population(const GeneratorConfig& config) {
  Rng rng(config.seed);
  switch (config.family) {
  case Family::classification:
    return gen_classification(config.population_size, config.aur_param, rng);
  case Family::blobs: return gen_blobs(config.population_size, config.aur_param, rng);
  case Family::circles:
    return gen_circles(config.population_size, config.aur_param, config.noise_std, rng);
  case Family::moons: return gen_moons(config.population_size, config.aur_param, rng);
  }
  throw std::invalid_argument("unhandled dataset family");
}

PoolSplit split_pools(std::span<const LabeledInstance> population, const PoolSizes& sizes,
                      Rng& rng) {
  if (sizes.total() > population.size()) {
    throw std::invalid_argument("pool sizes (" + std::to_string(sizes.total()) +
                                ") exceed population size (" +
                                std::to_string(population.size()) + ")");
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }

  std::size_t cursor = 0;
  const auto cut = [&](PoolRole role, std::size_t count) {
    std::vector<LabeledInstance> instances;
    std::vector<std::size_t> ids;
    instances.reserve(count);
    ids.reserve(count);
    for (std::size_t i = 0; i < count; ++i, ++cursor) {
      ids.push_back(order[cursor]);
      instances.push_back(population[order[cursor]]);
    }
    return DataPool(role, std::move(instances), std::move(ids));
  };
  PoolSplit split;
  split.known = cut(PoolRole::known, sizes.known);
  split.unknown = cut(PoolRole::unknown, sizes.unknown);
  split.test = cut(PoolRole::test, sizes.test);
  return split;
}

void write_dataset_csv(std::ostream& out, std::span<const LabeledInstance> instances) {
  const std::size_t dim = instances.empty() ? 0 : instances.front().features.size();
  for (std::size_t d = 0; d < dim; ++d) out << 'f' << d << ',';
  out << "label\n";
  const auto flags = out.flags();
  const auto precision = out.precision(9);
  out.unsetf(std::ios_base::floatfield);
  for (const auto& inst : instances) {
    for (double x : inst.features) out << x << ',';
    out << inst.label << '\n';
  }
  out.precision(precision);
  out.flags(flags);
}

} // namespace alsim
