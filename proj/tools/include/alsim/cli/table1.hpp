#pragma once

#include <iosfwd>
#include <vector>

#include "alsim/special_functions.hpp"

namespace alsim::cli {

/// The reference bell-curve intervals for alpha = beta in
/// {2, 5, 10, 20, 50, 100}. The reference bounds are the central 50% mass
/// (quartiles) of Beta(a, a), although they are usually quoted as 95%
/// intervals; both are computed here.
inline constexpr double kReferenceMass = 0.50;
inline constexpr double kWideMass = 0.95;

struct ShapeIntervalRow {
  BetaShape shape;
  Interval reference;
  Interval computed;  ///< central kReferenceMass interval
  Interval central95; ///< central kWideMass interval
};

std::vector<ShapeIntervalRow> shape_interval_table();

/// Fixed-width table, bounds at 4 decimals, with absolute deviations from
/// the reference values.
void print_shape_interval_table(std::ostream& out, const std::vector<ShapeIntervalRow>& rows);

} // namespace alsim::cli
