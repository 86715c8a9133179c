#include "alsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace alsim {

namespace {

void check_count(std::size_t pool_size, std::size_t n) {
  if (n > pool_size) {
    throw std::invalid_argument("cannot sample " + std::to_string(n) + " items from a pool of " +
                                std::to_string(pool_size));
  }
}

// Moves a uniform sample of `n` elements of `items` to its front.
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t n, Rng& rng) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.next_below(items.size() - i));
    std::swap(items[i], items[j]);
  }
}

} // namespace

std::vector<std::size_t> uniform_sample_without_replacement(std::size_t pool_size,
                                                            std::size_t n, Rng& rng) {
  check_count(pool_size, n);
  std::vector<std::size_t> indices(pool_size);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  partial_shuffle(indices, n, rng);
  indices.resize(n);
  return indices;
}

std::vector<std::size_t> weighted_sample_without_replacement(std::span<const double> weights,
                                                             std::size_t n, Rng& rng) {
  check_count(weights.size(), n);

  struct Keyed {
    double log_key;
    std::size_t index;
  };
  std::vector<Keyed> keyed;
  std::vector<std::size_t> zero_weight;
  keyed.reserve(weights.size());

  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weight " + std::to_string(i) +
                                  " must be finite and non-negative");
    }
    if (w == 0.0) {
      zero_weight.push_back(i);
      continue;
    }
    const double u = rng.next_uniform();
    const double log_key =
        u > 0.0 ? std::log(u) / w : -std::numeric_limits<double>::infinity();
    keyed.push_back({log_key, i});
  }

  const std::size_t from_keys = std::min(n, keyed.size());
  const auto by_key = [](const Keyed& lhs, const Keyed& rhs) {
    if (lhs.log_key != rhs.log_key) return lhs.log_key > rhs.log_key;
    return lhs.index < rhs.index;
  };
  std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(from_keys),
                    keyed.end(), by_key);

  std::vector<std::size_t> selected;
  selected.reserve(n);
  for (std::size_t i = 0; i < from_keys; ++i) selected.push_back(keyed[i].index);

  const std::size_t deficit = n - from_keys;
  if (deficit > 0) {
    partial_shuffle(zero_weight, deficit, rng);
    selected.insert(selected.end(), zero_weight.begin(),
                    zero_weight.begin() + static_cast<std::ptrdiff_t>(deficit));
  }
  return selected;
}

} // namespace alsim
