#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alsim/datasets.hpp"
#include "alsim/rng.hpp"
#include "alsim/special_functions.hpp"

namespace alsim {

/// An unknown-pool instance annotated with the current model's P(y = 1).
struct ScoredInstance {
  std::size_t pool_index = 0;
  double p_hat = 0.5;
};

enum class StrategyKind { passive, uncertainty, bellcurve };

std::string_view to_string(StrategyKind kind) noexcept;
StrategyKind parse_strategy_kind(std::string_view name);

inline constexpr BetaShape kDefaultBellShape{10.0, 10.0};

struct QueryStrategy {
  StrategyKind kind = StrategyKind::passive;
  /// Only meaningful for bellcurve.
  BetaShape shape = kDefaultBellShape;

  static QueryStrategy passive() { return {StrategyKind::passive, kDefaultBellShape}; }
  static QueryStrategy uncertainty() { return {StrategyKind::uncertainty, kDefaultBellShape}; }
  static QueryStrategy bellcurve(BetaShape shape = kDefaultBellShape) {
    return {StrategyKind::bellcurve, shape};
  }

  /// "passive", "uncertainty" or "bellcurve(a,b)".
  std::string label() const;

  friend bool operator==(const QueryStrategy&, const QueryStrategy&) = default;
};

/// Uniform choice of n pool indices, ignoring p_hat.
std::vector<std::size_t> passive_select(std::span<const ScoredInstance> pool, std::size_t n,
                                        Rng& rng);

/// |p_hat - 0.5| on a 2^-32 grid. Distances that are equal in exact
/// arithmetic but differ in the last bits (3/7 and 4/7, say) share a key.
std::uint64_t uncertainty_key(double p_hat) noexcept;

/// The n instances with smallest uncertainty_key, ties to the lower
/// pool_index, returned in that order.
std::vector<std::size_t> uncertainty_select(std::span<const ScoredInstance> pool, std::size_t n);

/// Weighted sampling without replacement with weight beta_pdf(p_hat, shape).
/// Requires alpha, beta >= 1.
std::vector<std::size_t> bellcurve_select(std::span<const ScoredInstance> pool, std::size_t n,
                                          const BetaShape& shape, Rng& rng);

/// Dispatch on strategy.kind. Uncertainty ignores rng.
std::vector<std::size_t> select_batch(const QueryStrategy& strategy,
                                      std::span<const ScoredInstance> pool, std::size_t n,
                                      Rng& rng);

/// Throws std::invalid_argument when a bellcurve strategy has alpha or beta
/// below 1.
void validate(const QueryStrategy& strategy);

struct AnnotationResult {
  /// Selected instances, labels revealed, in selection order.
  DataPool batch;
  /// The unknown pool minus the selection, original order preserved.
  DataPool remaining;
};

/// Reveals the labels of `selected` (positions in `unknown`). Throws
/// std::out_of_range on an invalid position and std::invalid_argument on a
/// duplicate or an unmasked input pool.
AnnotationResult annotate(const DataPool& unknown, std::span<const std::size_t> selected);

} // namespace alsim
