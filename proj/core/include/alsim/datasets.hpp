#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "alsim/rng.hpp"

namespace alsim {

/// Synthetic dataset families. Each has one knob controlling the size of the
/// region where the two classes overlap.
enum class Family { classification, blobs, circles, moons };

std::string_view to_string(Family family) noexcept;
/// Throws std::invalid_argument for an unknown name.
Family parse_family(std::string_view name);
/// 4 for classification and blobs, 2 for circles and moons.
std::size_t feature_dimension(Family family) noexcept;

struct LabeledInstance {
  std::vector<double> features;
  int label = 0;

  friend bool operator==(const LabeledInstance&, const LabeledInstance&) = default;
};

enum class PoolRole { known, unknown, test };

class DataPool;
struct AnnotationResult;
AnnotationResult annotate(const DataPool& unknown, std::span<const std::size_t> selected);

/// Ordered collection of instances. Each instance carries an identity (its
/// index in the generated population) so that pools can be checked for
/// disjointness. Pools with role `unknown` are masked: label() throws and the
/// only way to reveal labels is annotate().
class DataPool {
public:
  DataPool() = default;
  DataPool(PoolRole role, std::vector<LabeledInstance> instances, std::vector<std::size_t> ids);

  PoolRole role() const noexcept { return role_; }
  bool masked() const noexcept { return role_ == PoolRole::unknown; }
  std::size_t size() const noexcept { return instances_.size(); }
  bool empty() const noexcept { return instances_.empty(); }
  /// Feature dimension; 0 for an empty pool.
  std::size_t dimension() const noexcept;

  std::span<const double> features(std::size_t i) const;
  /// Throws std::logic_error if the pool is masked.
  int label(std::size_t i) const;
  std::size_t id(std::size_t i) const { return ids_.at(i); }
  const std::vector<std::size_t>& ids() const noexcept { return ids_; }

  /// Appends every instance of `labelled`. Both pools must be unmasked.
  void merge(const DataPool& labelled);

private:
  friend AnnotationResult annotate(const DataPool& unknown, std::span<const std::size_t> selected);

  PoolRole role_ = PoolRole::known;
  std::vector<LabeledInstance> instances_;
  std::vector<std::size_t> ids_;
};

/// Two Gaussian classes with unit variance per coordinate in 4-d, centred at
/// -/+ class_sep/2 along the unit all-ones direction. class_sep >= 0.
std::vector<LabeledInstance> gen_classification(std::size_t n, double class_sep, Rng& rng);

/// Two isotropic Gaussian blobs in 4-d. Centers are drawn uniformly from
/// [-10, 10]^4 (class 0 first), then n/2 points per class.
std::vector<LabeledInstance> gen_blobs(std::size_t n, double cluster_std, Rng& rng);

/// Concentric circles: class 0 on radius 1, class 1 on radius `factor`,
/// angles uniform in [0, 2pi), plus Gaussian noise per coordinate.
std::vector<LabeledInstance> gen_circles(std::size_t n, double factor, double noise_std, Rng& rng);

/// Interleaved half moons: class 0 on (cos t, sin t), class 1 on
/// (1 - cos t, 0.5 - sin t), t uniform in [0, pi], plus Gaussian noise.
std::vector<LabeledInstance> gen_moons(std::size_t n, double noise_std, Rng& rng);

inline constexpr double kDefaultCirclesNoise = 0.1;

struct GeneratorConfig {
  Family family = Family::blobs;
  std::size_t population_size = 2010;
  /// class_sep, cluster_std, circle factor or moon noise, depending on family.
  double aur_param = 3.0;
  /// Coordinate noise for circles; unused by the other families.
  double noise_std = kDefaultCirclesNoise;
  std::uint64_t seed = 0;
};

/// Dispatches to the family generator with Rng(config.seed).
std::vector<LabeledInstance> generate_population(const GeneratorConfig& config);

struct PoolSizes {
  std::size_t known = 10;
  std::size_t unknown = 1000;
  std::size_t test = 1000;

  std::size_t total() const noexcept { return known + unknown + test; }
};

struct PoolSplit {
  DataPool known;
  DataPool unknown;
  DataPool test;
};

/// Shuffles the population and cuts it, in order, into known, unknown
/// (masked) and test pools. Identities are population indices.
/// Throws std::invalid_argument if the sizes exceed the population.
PoolSplit split_pools(std::span<const LabeledInstance> population, const PoolSizes& sizes,
                      Rng& rng);

/// CSV with header `f0,...,f{d-1},label`, 9 significant digits.
void write_dataset_csv(std::ostream& out, std::span<const LabeledInstance> instances);

} // namespace alsim
