#include "alsim/cli/table1.hpp"

#include <cmath>
#include <ostream>

#include <fmt/ostream.h>

namespace alsim::cli {

std::vector<ShapeIntervalRow> shape_interval_table() {
  struct Reference {
    double shape;
    double lower;
    double upper;
  };
  static constexpr Reference kReference[] = {
      {2.0, 0.3264, 0.6736},   {5.0, 0.3920, 0.6080},   {10.0, 0.4241, 0.5759},
      {20.0, 0.4465, 0.5535},  {50.0, 0.4662, 0.5338},  {100.0, 0.4761, 0.5239},
  };
  std::vector<ShapeIntervalRow> rows;
  for (const auto& ref : kReference) {
    const BetaShape shape{ref.shape, ref.shape};
    rows.push_back({shape,
                    {ref.lower, ref.upper},
                    beta_central_interval(shape, kReferenceMass),
                    beta_central_interval(shape, kWideMass)});
  }
  return rows;
}

void print_shape_interval_table(std::ostream& out, const std::vector<ShapeIntervalRow>& rows) {
  fmt::print(out, "Central intervals of Beta(a, b); 'lower'/'upper' hold {:.0f}% of the mass "
                  "(matching the reference bounds), lower95/upper95 hold {:.0f}%.\n",
             kReferenceMass * 100.0, kWideMass * 100.0);
  fmt::print(out, "{:>6} {:>6} {:>8} {:>8} {:>9} {:>9} {:>9} {:>9} {:>8} {:>8}\n", "alpha",
             "beta", "lower", "upper", "ref_lower", "ref_upper", "dev_lower", "dev_upper",
             "lower95", "upper95");
  for (const auto& row : rows) {
    fmt::print(out, "{:>6g} {:>6g} {:>8.4f} {:>8.4f} {:>9.4f} {:>9.4f} {:>9.6f} {:>9.6f} "
                    "{:>8.4f} {:>8.4f}\n",
               row.shape.alpha, row.shape.beta, row.computed.lower, row.computed.upper,
               row.reference.lower, row.reference.upper,
               std::fabs(row.computed.lower - row.reference.lower),
               std::fabs(row.computed.upper - row.reference.upper), row.central95.lower,
               row.central95.upper);
  }
}

} // namespace alsim::cli
