#pragma once

// Special functions for the beta family: log-gamma, density, CDF and central
// intervals. All functions throw std::domain_error on arguments outside their
// mathematical domain.

namespace alsim {

/// Shape parameters of a Beta(alpha, beta) distribution. Both must be > 0.
struct BetaShape {
  double alpha = 1.0;
  double beta = 1.0;

  friend bool operator==(const BetaShape&, const BetaShape&) = default;
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Throws std::domain_error unless alpha > 0 and beta > 0 (and finite).
void validate(const BetaShape& shape);

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms); absolute
/// error below 1e-12 on [0.5, 200].
double log_gamma(double x);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b).
double log_beta(double a, double b);

/// Beta density at p in [0, 1], evaluated in log space.
///
/// At an endpoint the factor with exponent zero contributes 1, a positive
/// exponent gives density 0 and a negative exponent (shape < 1) gives +inf.
double beta_pdf(double p, const BetaShape& shape);

/// Regularized incomplete beta I_x(alpha, beta), i.e. the Beta CDF at x.
/// Continued fraction (modified Lentz) with the usual symmetry swap.
double regularized_incomplete_beta(double x, const BetaShape& shape);

/// Smallest x with I_x(alpha, beta) >= t, by bisection to 1e-12 in x
/// (at most 200 halvings). t must lie in [0, 1].
double beta_quantile(double t, const BetaShape& shape);

/// Central interval holding `mass` of the distribution:
/// (q((1 - mass) / 2), q((1 + mass) / 2)). Requires 0 < mass < 1.
Interval beta_central_interval(const BetaShape& shape, double mass);

} // namespace alsim
