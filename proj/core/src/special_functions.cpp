#include "alsim/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace alsim {

namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};

[[noreturn]] void domain_failure(const std::string& what) {
  throw std::domain_error(what);
}

// Continued fraction for I_x(a, b); converges quickly for x < (a+1)/(a+b+2).
double incomplete_beta_fraction(double x, double a, double b) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEpsilon = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) return h;
  }
  return h;
}

} // namespace

void validate(const BetaShape& shape) {
  if (!(shape.alpha > 0.0) || !(shape.beta > 0.0) || !std::isfinite(shape.alpha) ||
      !std::isfinite(shape.beta)) {
    domain_failure("beta shape parameters must be finite and > 0 (alpha=" +
                   std::to_string(shape.alpha) + ", beta=" + std::to_string(shape.beta) + ")");
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || std::isnan(x)) domain_failure("log_gamma: argument must be > 0");
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
    constexpr double kPi = 3.14159265358979323846;
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + 7.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta_pdf(double p, const BetaShape& shape) {
  validate(shape);
  if (!(p >= 0.0 && p <= 1.0)) domain_failure("beta_pdf: p must lie in [0, 1]");

  const double a1 = shape.alpha - 1.0;
  const double b1 = shape.beta - 1.0;
  const double lb = log_beta(shape.alpha, shape.beta);

  if (p == 0.0 || p == 1.0) {
    const double exponent = (p == 0.0) ? a1 : b1;
    if (exponent > 0.0) return 0.0;
    if (exponent < 0.0) return std::numeric_limits<double>::infinity();
    // The other factor is evaluated at 1 and equals 1 whatever its exponent.
    return std::exp(-lb);
  }

  double log_density = -lb;
  if (a1 != 0.0) log_density += a1 * std::log(p);
  if (b1 != 0.0) log_density += b1 * std::log1p(-p);
  return std::exp(log_density);
}

double regularized_incomplete_beta(double x, const BetaShape& shape) {
  validate(shape);
  if (!(x >= 0.0 && x <= 1.0)) {
    domain_failure("regularized_incomplete_beta: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double a = shape.alpha;
  const double b = shape.beta;
  const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * incomplete_beta_fraction(x, a, b) / a;
  }
  return 1.0 - front * incomplete_beta_fraction(1.0 - x, b, a) / b;
}

double beta_quantile(double t, const BetaShape& shape) {
  validate(shape);
  if (!(t >= 0.0 && t <= 1.0)) domain_failure("beta_quantile: t must lie in [0, 1]");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;

  constexpr int kMaxIterations = 200;
  constexpr double kTolerance = 1e-12;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kMaxIterations && hi - lo > kTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (regularized_incomplete_beta(mid, shape) < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Interval beta_central_interval(const BetaShape& shape, double mass) {
  validate(shape);
  if (!(mass > 0.0 && mass < 1.0)) {
    domain_failure("beta_central_interval: mass must lie in (0, 1)");
  }
  const double tail = 0.5 * (1.0 - mass);
  return {beta_quantile(tail, shape), beta_quantile(1.0 - tail, shape)};
}

} // namespace alsim
