#pragma once

// Orthogonal polynomials, Pochhammer symbols, the terminating 3F2 at unit
// argument and Gauss-Jacobi rules. Everything here is a pure function.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>

#include "hulthen/error.hpp"

namespace hulthen::specfun {

/// log|Gamma(x)|; reentrant, unlike std::lgamma which touches signgam.
inline double log_gamma(double x) {
  int sign = 0;
  return boost::math::lgamma(x, &sign);
}

inline double log_gamma(double x, int& sign) {
  return boost::math::lgamma(x, &sign);
}

/// Rising factorial (x)_k = x(x+1)...(x+k-1).
inline double pochhammer(double x, unsigned k) {
  if (k == 0) return 1.0;
  // Exact zero when one factor vanishes.
  if (x <= 0.0 && x == std::floor(x) && -x < static_cast<double>(k)) return 0.0;
  if (x > 30.0) {
    return std::exp(log_gamma(x + k) - log_gamma(x));
  }
  if (x < -30.0 && x + k - 1.0 < 0.0) {
    // Every factor negative: (x)_k = (-1)^k (1-x-k)_k with 1-x-k > 1.
    const double mag = std::exp(log_gamma(1.0 - x) - log_gamma(1.0 - x - k));
    return (k % 2 == 0) ? mag : -mag;
  }
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= x + i;
  return r;
}

/// Jacobi polynomial P_n^{(a,b)}(z) by the three-term recurrence. Scalar may
/// be double or std::complex<double>; parameters outside a,b > -1 are
/// evaluated formally.
template <class Scalar>
Scalar jacobi_poly(unsigned n, Scalar a, Scalar b, Scalar z) {
  const Scalar one(1.0), two(2.0);
  if (n == 0) return one;
  Scalar p0 = one;
  Scalar p1 = (a + one) + (a + b + two) * (z - one) / two;
  for (unsigned k = 2; k <= n; ++k) {
    const Scalar kk(static_cast<double>(k));
    const Scalar c = two * kk + a + b;
    const Scalar lead = two * kk * (kk + a + b) * (c - two);
    const Scalar mid = (c - one) * (c * (c - two) * z + a * a - b * b);
    const Scalar tail = two * (kk + a - one) * (kk + b - one) * c;
    const Scalar p2 = (mid * p1 - tail * p0) / lead;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

inline double jacobi_poly(unsigned n, double a, double b, double z) {
  return jacobi_poly<double>(n, a, b, z);
}

/// m-th derivative in z: (n+a+b+1)_m / 2^m * P_{n-m}^{(a+m,b+m)}(z).
template <class Scalar>
Scalar jacobi_poly_derivative(unsigned n, Scalar a, Scalar b, Scalar z,
                              unsigned order = 1) {
  if (order > n) return Scalar(0.0);
  Scalar factor(1.0);
  for (unsigned i = 0; i < order; ++i) {
    factor *= (Scalar(static_cast<double>(n + i + 1)) + a + b) / Scalar(2.0);
  }
  const Scalar shift(static_cast<double>(order));
  return factor * jacobi_poly<Scalar>(n - order, a + shift, b + shift, z);
}

/// Explicit finite sum
///   P_n^{(a,b)}(z) = (a+1)_n/n! * sum_l (-n)_l (n+a+b+1)_l / ((a+1)_l l!) ((1-z)/2)^l.
/// The terms alternate and cancel for large n, so double precision loses
/// several digits past n ~ 8; instantiate with a wider Real when that matters.
template <class Real>
Real jacobi_poly_series_t(unsigned n, const Real& a, const Real& b, const Real& z) {
  const Real y = (Real(1) - z) / 2;
  Real term = 1;
  Real sum = 1;
  for (unsigned l = 0; l < n; ++l) {
    const Real lf = l;
    term *= (lf - Real(n)) * (Real(n) + a + b + 1 + lf) / ((a + 1 + lf) * (lf + 1)) * y;
    sum += term;
  }
  Real lead = 1;
  for (unsigned k = 1; k <= n; ++k) lead *= (a + Real(k)) / Real(k);
  return lead * sum;
}

inline double jacobi_poly_series(unsigned n, double a, double b, double z) {
  return jacobi_poly_series_t<double>(n, a, b, z);
}

/// Value of P_n^{(a,b)}(1) = binomial(n+a, n).
inline double jacobi_at_one(unsigned n, double a) {
  double r = 1.0;
  for (unsigned k = 1; k <= n; ++k) r *= (a + k) / k;
  return r;
}

/// Generalised Laguerre polynomial L_n^{(a)}(z) by recurrence.
template <class Scalar>
Scalar laguerre_poly(unsigned n, Scalar a, Scalar z) {
  const Scalar one(1.0);
  if (n == 0) return one;
  Scalar l0 = one;
  Scalar l1 = one + a - z;
  for (unsigned k = 1; k < n; ++k) {
    const Scalar kk(static_cast<double>(k));
    const Scalar l2 =
        ((Scalar(2.0) * kk + one + a - z) * l1 - (kk + a) * l0) / (kk + one);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

inline double laguerre_poly(unsigned n, double a, double z) {
  return laguerre_poly<double>(n, a, z);
}

/// d^m/dz^m L_n^{(a)} = (-1)^m L_{n-m}^{(a+m)}.
template <class Scalar>
Scalar laguerre_poly_derivative(unsigned n, Scalar a, Scalar z, unsigned order = 1) {
  if (order > n) return Scalar(0.0);
  const Scalar v = laguerre_poly<Scalar>(n - order, a + Scalar(static_cast<double>(order)), z);
  return (order % 2 == 0) ? v : -v;
}

/// 3F2(-n, a, b; c, d; 1) summed to termination. Real may be a wider
/// floating type when the alternating terms cancel heavily.
template <class Real>
Real hyp3f2_terminating_t(unsigned n, const Real& a, const Real& b, const Real& c, const Real& d) {
  Real term(1);
  Real sum(1);
  for (unsigned k = 0; k < n; ++k) {
    const Real kf(k);
    const Real den = (c + kf) * (d + kf) * (kf + Real(1));
    if (den == Real(0)) {
      throw error(errc::pole_in_denominator, "3F2 denominator vanishes at k=" + std::to_string(k + 1));
    }
    term *= (kf - Real(n)) * (a + kf) * (b + kf) / den;
    sum += term;
  }
  return sum;
}

inline double hyp3f2_terminating(unsigned n, double a, double b, double c, double d) {
  return hyp3f2_terminating_t<double>(n, a, b, c, d);
}

/// A number held as mantissa * exp(log_scale), for polynomials whose values
/// overflow a double at large parameters.
struct scaled_double {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
  int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }
};

/// P_n^{(a,b)}(z) with periodic rescaling of the recurrence.
inline scaled_double jacobi_poly_scaled(unsigned n, double a, double b, double z) {
  scaled_double out{1.0, 0.0};
  if (n == 0) return out;
  double p0 = 1.0;
  double p1 = (a + 1.0) + (a + b + 2.0) * (z - 1.0) / 2.0;
  double log_scale = 0.0;
  for (unsigned k = 2; k <= n; ++k) {
    const double kk = k;
    const double c = 2.0 * kk + a + b;
    const double lead = 2.0 * kk * (kk + a + b) * (c - 2.0);
    const double mid = (c - 1.0) * (c * (c - 2.0) * z + a * a - b * b);
    const double tail = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * c;
    double p2 = (mid * p1 - tail * p0) / lead;
    p0 = p1;
    p1 = p2;
    const double mag = std::max(std::abs(p0), std::abs(p1));
    if (mag > 1e150 || (mag < 1e-150 && mag > 0.0)) {
      const double s = std::log(mag);
      p0 /= mag;
      p1 /= mag;
      log_scale += s;
    }
  }
  out.mantissa = p1;
  out.log_scale = log_scale;
  return out;
}

/// Nodes and weights for  int_{-1}^{1} (1-z)^a (1+z)^b f(z) dz.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights, double a,
                 double b)
      : nodes_(std::move(nodes)), weights_(std::move(weights)), a_(a), b_(b) {}

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double exponent_a() const { return a_; }
  double exponent_b() const { return b_; }
  std::size_t size() const { return nodes_.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
    return acc;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double a_;
  double b_;
};

namespace detail {

// Recurrence coefficients of the monic Jacobi polynomials (Golub-Welsch).
inline void jacobi_matrix(unsigned npoints, double a, double b, Eigen::VectorXd& diag,
                          Eigen::VectorXd& sub) {
  diag.resize(npoints);
  sub.resize(npoints > 1 ? npoints - 1 : 0);
  const double ab = a + b;
  for (unsigned k = 0; k < npoints; ++k) {
    const double c = 2.0 * k + ab;
    if (k == 0) {
      diag[0] = (b - a) / (ab + 2.0);
    } else {
      diag[k] = (b * b - a * a) / (c * (c + 2.0));
    }
  }
  for (unsigned k = 1; k < npoints; ++k) {
    const double kk = k;
    const double c = 2.0 * kk + ab;
    double beta2;
    if (k == 1) {
      // (k+a+b)/(2k+a+b-1) cancels when a+b = -1.
      beta2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta2 = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) /
              (c * c * (c + 1.0) * (c - 1.0));
    }
    sub[k - 1] = std::sqrt(beta2);
  }
}

}  // namespace detail

/// Gauss-Jacobi rule exact through polynomial degree 2*npoints-1.
/// Eigenvalues of the Jacobi matrix seed a Newton polish on P_n; weights
/// come from the closed form in log space so large exponents do not overflow.
inline QuadratureRule gauss_jacobi_rule(unsigned npoints, double a, double b) {
  if (!(a > -1.0) || !(b > -1.0)) {
    throw error(errc::invalid_exponent, "Gauss-Jacobi exponents must exceed -1 (a=" +
                                            std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  if (npoints == 0) {
    throw error(errc::invalid_parameter, "Gauss-Jacobi rule needs at least one point");
  }

  Eigen::VectorXd diag, sub;
  detail::jacobi_matrix(npoints, a, b, diag, sub);
  std::vector<double> nodes(npoints);
  if (npoints == 1) {
    nodes[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (unsigned i = 0; i < npoints; ++i) nodes[i] = solver.eigenvalues()[i];
  }

  const unsigned n = npoints;
  // Newton on P_n using P_n' = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}.
  const double dfac = std::log(0.5 * (n + a + b + 1.0));
  for (double& x : nodes) {
    for (int it = 0; it < 50; ++it) {
      const scaled_double p = jacobi_poly_scaled(n, a, b, x);
      const scaled_double dp = jacobi_poly_scaled(n - 1, a + 1.0, b + 1.0, x);
      if (p.mantissa == 0.0 || dp.mantissa == 0.0) break;
      const double ratio = p.sign() * dp.sign() * std::exp(p.log_abs() - dp.log_abs() - dfac);
      double next = x - ratio;
      if (next <= -1.0) next = 0.5 * (x - 1.0);
      if (next >= 1.0) next = 0.5 * (x + 1.0);
      const double step = std::abs(next - x);
      x = next;
      if (step <= 1e-14 * std::max(1e-3, std::abs(x))) break;
    }
  }
  std::sort(nodes.begin(), nodes.end());

  const double log_c = (a + b + 1.0) * std::log(2.0) + log_gamma(n + a + 1.0) +
                       log_gamma(n + b + 1.0) - log_gamma(n + a + b + 1.0) -
                       log_gamma(n + 1.0);
  std::vector<double> weights(npoints);
  for (unsigned i = 0; i < npoints; ++i) {
    const double x = nodes[i];
    const scaled_double dp = jacobi_poly_scaled(n - 1, a + 1.0, b + 1.0, x);
    const double log_dp = dp.log_abs() + dfac;
    weights[i] = std::exp(log_c - std::log1p(-x) - std::log1p(x) - 2.0 * log_dp);
  }
  return QuadratureRule(std::move(nodes), std::move(weights), a, b);
}

/// Euler beta function in log form.
inline double log_beta(double x, double y) {
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

/// True when (a, b) lie in the classical orthogonality range a, b > -1.
inline bool classical_parameters(double a, double b) { return a > -1.0 && b > -1.0; }

}  // namespace hulthen::specfun
