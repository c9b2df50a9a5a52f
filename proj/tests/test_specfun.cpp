#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "hulthen/specfun.hpp"

using namespace hulthen;
using namespace hulthen::specfun;

// Reference values below were computed with mpmath at 40 digits.

TEST(Jacobi, KnownValues) {
  EXPECT_NEAR(jacobi_poly(3, 0.5, 1.5, 0.3), -0.39725, 1e-14);
  EXPECT_NEAR(jacobi_poly(5, 2.0, -0.5, -0.7), -0.05868959106445324, 1e-14);
  EXPECT_NEAR(jacobi_poly(7, 1.25, 0.75, 0.4), 0.42262477221679699, 1e-14);
}

TEST(Jacobi, LowOrders) {
  EXPECT_DOUBLE_EQ(jacobi_poly(0, 3.0, 4.0, 0.2), 1.0);
  // P_1 = (a+1) + (a+b+2)(z-1)/2
  EXPECT_NEAR(jacobi_poly(1, 3.0, 4.0, 0.2), 4.0 + 9.0 * (-0.8) / 2.0, 1e-15);
}

TEST(Jacobi, Derivatives) {
  EXPECT_NEAR(jacobi_poly_derivative(4u, 1.0, 2.0, 0.2, 1), -2.24, 1e-12);
  EXPECT_NEAR(jacobi_poly_derivative(4u, 1.0, 2.0, 0.2, 2), -21.6, 1e-11);
  EXPECT_DOUBLE_EQ(jacobi_poly_derivative(2u, 1.0, 2.0, 0.2, 3), 0.0);
}

TEST(Jacobi, EndpointIsBinomial) {
  for (unsigned n = 0; n <= 20; ++n) {
    const double binom = std::exp(log_gamma(n + 2.5 + 1.0) - log_gamma(2.5 + 1.0) - log_gamma(n + 1.0));
    EXPECT_NEAR(jacobi_poly(n, 2.5, 0.5, 1.0) / binom, 1.0, 1e-12) << n;
    EXPECT_NEAR(jacobi_at_one(n, 2.5) / binom, 1.0, 1e-12) << n;
  }
}

TEST(Jacobi, SeriesMatchesRecurrenceAtLowOrder) {
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_NEAR(jacobi_poly_series(n, 0.7, 1.9, -0.35), jacobi_poly(n, 0.7, 1.9, -0.35), 1e-12) << n;
  }
}

TEST(Jacobi, ComplexParametersReduceToReal) {
  using C = std::complex<double>;
  const C v = jacobi_poly<C>(4, C(1.5, 0.0), C(0.5, 0.0), C(0.1, 0.0));
  EXPECT_NEAR(v.real(), jacobi_poly(4, 1.5, 0.5, 0.1), 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(Jacobi, ScaledAgreesWhereDoubleIsFine) {
  const auto s = jacobi_poly_scaled(6, 3.0, 2.0, 0.3);
  const double v = jacobi_poly(6, 3.0, 2.0, 0.3);
  EXPECT_NEAR(s.sign() * std::exp(s.log_abs()), v, 1e-12 * std::abs(v));
}

TEST(Laguerre, KnownValues) {
  EXPECT_NEAR(laguerre_poly(4, 2.0, 1.7), -1.8899958333333332, 1e-13);
  EXPECT_NEAR(laguerre_poly(6, 0.5, 3.2), 0.49617460972222188, 1e-13);
  EXPECT_NEAR(laguerre_poly_derivative(6u, 0.5, 3.2, 1), -1.9168660833333337, 1e-12);
}

TEST(Pochhammer, Values) {
  EXPECT_DOUBLE_EQ(pochhammer(2.5, 4), 216.5625);
  EXPECT_DOUBLE_EQ(pochhammer(-3.0, 5), 0.0);
  EXPECT_DOUBLE_EQ(pochhammer(7.0, 0), 1.0);
  EXPECT_NEAR(pochhammer(40.0, 3) / (40.0 * 41.0 * 42.0), 1.0, 1e-13);
}

TEST(Hyp3F2, Terminating) {
  EXPECT_NEAR(hyp3f2_terminating(3, 4.5, 2.0, 3.0, 1.5), -0.0028571428571428571, 1e-15);
  EXPECT_NEAR(hyp3f2_terminating(4, 6.2, 1.3, 2.1, 3.7), 0.044582483425420444, 1e-14);
  EXPECT_DOUBLE_EQ(hyp3f2_terminating(0, 1.0, 2.0, 3.0, 4.0), 1.0);
}

TEST(Hyp3F2, NEqualsOneClosedForm) {
  EXPECT_DOUBLE_EQ(hyp3f2_terminating(1, 2.0, 3.0, 4.0, 5.0), 1.0 - 6.0 / 20.0);
}

TEST(Hyp3F2, PoleInDenominator) {
  EXPECT_CODE(hyp3f2_terminating(3, 1.0, 1.0, -1.0, 2.0), errc::pole_in_denominator);
}

TEST(GaussJacobi, Integrals) {
  const auto rule = gauss_jacobi_rule(10, 0.5, 1.5);
  EXPECT_EQ(rule.size(), 10u);
  EXPECT_NEAR(rule.integrate([](double z) { return z * z * z * z; }), 0.19634954084936208, 1e-14);
  const auto r2 = gauss_jacobi_rule(24, -0.5, 2.0);
  EXPECT_NEAR(r2.integrate([](double z) { return std::cos(z); }), 4.2869813628175986, 1e-13);
}

TEST(GaussJacobi, WeightsSumToBeta) {
  const auto rule = gauss_jacobi_rule(16, 2.0, 3.0);
  double sum = 0.0;
  for (double w : rule.weights()) sum += w;
  EXPECT_NEAR(sum, std::exp(6.0 * std::log(2.0) + log_beta(3.0, 4.0)), 1e-13);
}

TEST(GaussJacobi, SinglePointLegendre) {
  const auto rule = gauss_jacobi_rule(1, 0.0, 0.0);
  ASSERT_EQ(rule.size(), 1u);
  EXPECT_NEAR(rule.nodes()[0], 0.0, 1e-15);
  EXPECT_NEAR(rule.weights()[0], 2.0, 1e-15);
}

TEST(GaussJacobi, LargeExponentsStayFinite) {
  const auto rule = gauss_jacobi_rule(64, 176.6, 46.4);
  for (double w : rule.weights()) EXPECT_TRUE(std::isfinite(w));
}

TEST(GaussJacobi, RejectsNonIntegrableExponents) {
  EXPECT_CODE(gauss_jacobi_rule(8, -1.0, 0.5), errc::invalid_exponent);
}

TEST(LogBeta, Value) { EXPECT_NEAR(log_beta(2.5, 3.5), -3.3018352699620526, 1e-14); }
