#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alsim/rng.hpp"

namespace alsim {

/// Uniform sample of `n` distinct indices from [0, pool_size), in draw order
/// (partial Fisher-Yates). Throws std::invalid_argument if n > pool_size.
std::vector<std::size_t> uniform_sample_without_replacement(std::size_t pool_size,
                                                            std::size_t n, Rng& rng);

/// Weighted sample of `n` distinct indices without replacement using
/// exponentiated keys: index i with w_i > 0 gets key u_i^(1/w_i) and the n
/// largest keys win. Keys are compared as ln(u_i)/w_i, which orders
/// identically and does not underflow for tiny weights; equal keys go to the
/// lower index.
///
/// One uniform is drawn per positive-weight index in index order. If fewer
/// than n weights are positive, the remainder is filled uniformly at random
/// from the zero-weight indices. Output order: descending key, then fill
/// order.
///
/// Throws std::invalid_argument if n exceeds the number of weights or any
/// weight is negative or non-finite.
std::vector<std::size_t> weighted_sample_without_replacement(std::span<const double> weights,
                                                             std::size_t n, Rng& rng);

} // namespace alsim
