#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "alsim/special_functions.hpp"
#include "oracles.hpp"

using alsim::BetaShape;

namespace {

double rel_diff(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

} // namespace

TEST(LogGamma, MatchesFactorialsAtIntegers) {
  for (unsigned n = 1; n <= 20; ++n) {
    EXPECT_NEAR(alsim::log_gamma(n), alsim::oracle::log_factorial(n - 1), 1e-10) << "n=" << n;
  }
}

TEST(LogGamma, PinnedValues) {
  EXPECT_NEAR(alsim::log_gamma(1.0), 0.0, 1e-14);
  EXPECT_NEAR(alsim::log_gamma(5.0), 3.1780538303479458, 1e-10); // ln 4!
  EXPECT_NEAR(alsim::log_gamma(0.5), 0.5723649429247001, 1e-10); // ln sqrt(pi)
  // scipy.special.gammaln
  EXPECT_NEAR(alsim::log_gamma(200.0), 857.9336698258575, 1e-10);
  EXPECT_NEAR(alsim::log_gamma(3.7), 1.428072326665388, 1e-10);
  EXPECT_NEAR(alsim::log_gamma(0.1), 2.252712651734206, 1e-10);
}

TEST(LogGamma, AgreesWithLibmOnRange) {
  for (double x = 0.5; x <= 200.0; x += 0.37) {
    EXPECT_NEAR(alsim::log_gamma(x), std::lgamma(x), 1e-10) << "x=" << x;
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(alsim::log_gamma(0.0), std::domain_error);
  EXPECT_THROW(alsim::log_gamma(-1.5), std::domain_error);
  EXPECT_THROW(alsim::log_gamma(std::nan("")), std::domain_error);
}

TEST(BetaPdf, ExamplePoints) {
  EXPECT_DOUBLE_EQ(alsim::beta_pdf(0.3, {1, 1}), 1.0);
  EXPECT_NEAR(alsim::beta_pdf(0.5, {2, 2}), 1.5, 1e-12);
  // 0.5^18 * 19!/(9! 9!) = 923780 / 2^18
  EXPECT_NEAR(alsim::beta_pdf(0.5, {10, 10}), 923780.0 / 262144.0, 1e-9);
  EXPECT_NEAR(alsim::beta_pdf(0.5, {10, 10}), 3.5239, 1e-3);
}

TEST(BetaPdf, MatchesFactorialOracle) {
  for (unsigned a : {1u, 2u, 3u, 7u, 20u}) {
    for (unsigned b : {1u, 4u, 10u}) {
      for (double p = 0.01; p < 1.0; p += 0.07) {
        EXPECT_LT(rel_diff(alsim::beta_pdf(p, {double(a), double(b)}),
                           alsim::oracle::beta_pdf_integer(p, a, b)),
                  1e-11)
            << a << "," << b << " p=" << p;
      }
    }
  }
}

TEST(BetaPdf, LargeShapeDoesNotOverflow) {
  const double peak = alsim::beta_pdf(0.5, {100, 100});
  EXPECT_TRUE(std::isfinite(peak));
  EXPECT_NEAR(peak, alsim::oracle::beta_pdf_integer(0.5, 100, 100), 1e-9 * peak);
  EXPECT_TRUE(std::isfinite(alsim::beta_pdf(0.5, {1000, 1000})));
}

TEST(BetaPdf, Endpoints) {
  EXPECT_EQ(alsim::beta_pdf(0.0, {2, 2}), 0.0);
  EXPECT_EQ(alsim::beta_pdf(1.0, {2, 2}), 0.0);
  // 1 / B(1, 3), via exp(-log_beta); a few ulps off exact.
  EXPECT_NEAR(alsim::beta_pdf(0.0, {1, 3}), 3.0, 1e-12);
  EXPECT_NEAR(alsim::beta_pdf(1.0, {3, 1}), 3.0, 1e-12);
  EXPECT_TRUE(std::isinf(alsim::beta_pdf(0.0, {0.5, 0.5})));
  EXPECT_TRUE(std::isinf(alsim::beta_pdf(1.0, {2.0, 0.5})));
}

TEST(BetaPdf, DomainErrors) {
  EXPECT_THROW(alsim::beta_pdf(-0.1, {2, 2}), std::domain_error);
  EXPECT_THROW(alsim::beta_pdf(1.1, {2, 2}), std::domain_error);
  EXPECT_THROW(alsim::beta_pdf(0.5, {0, 2}), std::domain_error);
  EXPECT_THROW(alsim::beta_pdf(0.5, {2, -1}), std::domain_error);
}

TEST(BetaPdf, SymmetricShapesAreMirrorSymmetric) {
  for (double a : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    for (int i = 0; i <= 1000; ++i) {
      const double p = i / 1000.0;
      EXPECT_LE(rel_diff(alsim::beta_pdf(p, {a, a}), alsim::beta_pdf(1.0 - p, {a, a})), 1e-12)
          << "a=" << a << " p=" << p;
    }
  }
}

TEST(BetaPdf, SymmetricShapesPeakAtHalf) {
  for (double a : {1.5, 2.0, 5.0, 10.0, 50.0}) {
    const double peak = alsim::beta_pdf(0.5, {a, a});
    for (int i = 0; i <= 200; ++i) EXPECT_LE(alsim::beta_pdf(i / 200.0, {a, a}), peak);
  }
}

TEST(BetaPdf, IntegratesToOne) {
  for (double a : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    const double area = alsim::oracle::trapezoid(
        [a](double p) { return alsim::beta_pdf(p, {a, a}); }, 0.0, 1.0, 10001);
    EXPECT_NEAR(area, 1.0, 1e-6) << "a=" << a;
  }
}

TEST(IncompleteBeta, Boundaries) {
  EXPECT_EQ(alsim::regularized_incomplete_beta(0.0, {3, 4}), 0.0);
  EXPECT_EQ(alsim::regularized_incomplete_beta(1.0, {3, 4}), 1.0);
  for (double a : {0.5, 1.0, 2.0, 7.5, 100.0}) {
    EXPECT_NEAR(alsim::regularized_incomplete_beta(0.5, {a, a}), 0.5, 1e-12) << a;
  }
}

TEST(IncompleteBeta, MatchesBinomialSumForIntegerShapes) {
  for (unsigned a : {1u, 2u, 5u, 10u, 20u}) {
    for (unsigned b : {1u, 3u, 10u, 20u}) {
      for (double x = 0.0; x <= 1.0; x += 0.05) {
        EXPECT_NEAR(alsim::regularized_incomplete_beta(x, {double(a), double(b)}),
                    alsim::oracle::incomplete_beta_integer(x, a, b), 1e-9)
            << a << "," << b << " x=" << x;
      }
    }
  }
}

TEST(IncompleteBeta, NonIntegerShapes) {
  // scipy.special.betainc
  EXPECT_NEAR(alsim::regularized_incomplete_beta(0.3, {2.5, 3.5}), 0.29675298929566646, 1e-9);
  EXPECT_NEAR(alsim::regularized_incomplete_beta(0.7, {0.5, 0.5}), 0.6309898804344546, 1e-9);
  EXPECT_NEAR(alsim::regularized_incomplete_beta(0.47, {100, 100}), 0.19815420142409287, 1e-9);
  EXPECT_NEAR(alsim::regularized_incomplete_beta(0.02, {1.5, 40}), 0.3465471321502204, 1e-9);
}

TEST(IncompleteBeta, MatchesQuadratureOfPdf) {
  const BetaShape shape{3.3, 6.1};
  for (double x : {0.1, 0.25, 0.4, 0.8}) {
    const double area = alsim::oracle::trapezoid(
        [&](double p) { return alsim::beta_pdf(p, shape); }, 0.0, x, 20001);
    EXPECT_NEAR(alsim::regularized_incomplete_beta(x, shape), area, 1e-7) << x;
  }
}

TEST(IncompleteBeta, Monotone) {
  const BetaShape shape{4.5, 2.5};
  double previous = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double value = alsim::regularized_incomplete_beta(i / 1000.0, shape);
    ASSERT_GE(value, previous);
    previous = value;
  }
}

TEST(CentralInterval, UniformQuantiles) {
  const auto interval = alsim::beta_central_interval({1, 1}, 0.95);
  EXPECT_NEAR(interval.lower, 0.025, 1e-9);
  EXPECT_NEAR(interval.upper, 0.975, 1e-9);
}

// The tabulated bell-curve widths are quartile bounds of Beta(a, a): they
// match the central 50% interval, not the 95% one.
TEST(CentralInterval, ReferenceBoundsAreHalfMass) {
  struct Row {
    double shape, lower, upper;
  };
  for (const Row& row : {Row{2, 0.3264, 0.6736}, Row{5, 0.3920, 0.6080}, Row{10, 0.4241, 0.5759},
                         Row{20, 0.4465, 0.5535}, Row{50, 0.4662, 0.5338},
                         Row{100, 0.4761, 0.5239}}) {
    const auto interval = alsim::beta_central_interval({row.shape, row.shape}, 0.5);
    EXPECT_NEAR(interval.lower, row.lower, 5e-4) << row.shape;
    EXPECT_NEAR(interval.upper, row.upper, 5e-4) << row.shape;
  }
}

TEST(CentralInterval, NinetyFivePercentAgainstScipy) {
  // scipy.stats.beta.ppf([0.025, 0.975], a, a)
  auto i2 = alsim::beta_central_interval({2, 2}, 0.95);
  EXPECT_NEAR(i2.lower, 0.09429932405024609, 1e-9);
  EXPECT_NEAR(i2.upper, 0.9057006759497539, 1e-9);
  auto i10 = alsim::beta_central_interval({10, 10}, 0.95);
  EXPECT_NEAR(i10.lower, 0.2886432479169988, 1e-9);
  EXPECT_NEAR(i10.upper, 0.7113567520830011, 1e-9);
}

TEST(CentralInterval, InvertsTheCdf) {
  for (double a : {2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
    for (double mass : {0.5, 0.9, 0.95}) {
      const auto interval = alsim::beta_central_interval({a, a}, mass);
      EXPECT_NEAR(alsim::regularized_incomplete_beta(interval.lower, {a, a}), (1 - mass) / 2, 1e-8);
      EXPECT_NEAR(alsim::regularized_incomplete_beta(interval.upper, {a, a}), (1 + mass) / 2, 1e-8);
    }
  }
}

TEST(CentralInterval, WidthShrinksWithShape) {
  double previous = 1.0;
  for (double a : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
    const auto interval = alsim::beta_central_interval({a, a}, 0.95);
    const double width = interval.upper - interval.lower;
    EXPECT_LT(width, previous) << a;
    previous = width;
  }
}

TEST(CentralInterval, DomainErrors) {
  EXPECT_THROW(alsim::beta_central_interval({2, 2}, 0.0), std::domain_error);
  EXPECT_THROW(alsim::beta_central_interval({2, 2}, 1.0), std::domain_error);
  EXPECT_THROW(alsim::beta_central_interval({0, 2}, 0.5), std::domain_error);
  EXPECT_THROW(alsim::beta_quantile(1.5, {2, 2}), std::domain_error);
}
