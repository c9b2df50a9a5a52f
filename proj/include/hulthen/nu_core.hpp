#pragma once

// Parametric Nikiforov-Uvarov engine for
//   F'' + (a1 - a2 s)/(s(1 - a3 s)) F' - (x1 s^2 - x2 s + x3)/(s(1 - a3 s))^2 F = 0.
// Everything stays real: a negative radicand is reported, never continued.

#include <cmath>
#include <string>

#include "hulthen/error.hpp"

namespace hulthen::nu {

struct CanonicalEquation {
  double alpha1 = 1.0;
  double alpha2 = 2.0;
  double alpha3 = 1.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;

  bool finite() const {
    return std::isfinite(alpha1) && std::isfinite(alpha2) && std::isfinite(alpha3) &&
           std::isfinite(xi1) && std::isfinite(xi2) && std::isfinite(xi3);
  }
};

struct NUParameterSet {
  CanonicalEquation source;
  double alpha4 = 0.0, alpha5 = 0.0, alpha6 = 0.0, alpha7 = 0.0, alpha8 = 0.0,
         alpha9 = 0.0;
  double alpha10 = 0.0, alpha11 = 0.0, alpha12 = 0.0, alpha13 = 0.0;
  double alpha10_star = 0.0, alpha11_star = 0.0, alpha12_star = 0.0, alpha13_star = 0.0;

  double alpha1() const { return source.alpha1; }
  double alpha2() const { return source.alpha2; }
  double alpha3() const { return source.alpha3; }
};

namespace detail {

inline void require_nonnegative(double value, const char* which) {
  if (!(value >= 0.0)) {
    throw error(errc::negative_discriminant,
                std::string(which) + " = " + std::to_string(value) + " < 0");
  }
}

}  // namespace detail

inline NUParameterSet derive_params(const CanonicalEquation& eq) {
  if (!eq.finite()) {
    throw error(errc::invalid_parameter, "canonical equation has non-finite entries");
  }
  NUParameterSet p;
  p.source = eq;
  const double a1 = eq.alpha1, a2 = eq.alpha2, a3 = eq.alpha3;
  p.alpha4 = 0.5 * (1.0 - a1);
  p.alpha5 = 0.5 * (a2 - 2.0 * a3);
  p.alpha6 = p.alpha5 * p.alpha5 + eq.xi1;
  p.alpha7 = 2.0 * p.alpha4 * p.alpha5 - eq.xi2;
  p.alpha8 = p.alpha4 * p.alpha4 + eq.xi3;
  p.alpha9 = a3 * (p.alpha7 + a3 * p.alpha8) + p.alpha6;
  detail::require_nonnegative(p.alpha8, "alpha8");
  detail::require_nonnegative(p.alpha9, "alpha9");

  const double r8 = std::sqrt(p.alpha8);
  const double r9 = std::sqrt(p.alpha9);
  p.alpha10 = a1 + 2.0 * p.alpha4 + 2.0 * r8;
  p.alpha11 = a2 - 2.0 * p.alpha5 + 2.0 * (r9 + a3 * r8);
  p.alpha12 = p.alpha4 + r8;
  p.alpha13 = p.alpha5 - (r9 + a3 * r8);

  p.alpha10_star = a1 + 2.0 * p.alpha4 - 2.0 * r8;
  p.alpha11_star = a2 - 2.0 * p.alpha5 - 2.0 * (r9 - a3 * r8);
  p.alpha12_star = p.alpha4 - r8;
  p.alpha13_star = p.alpha5 - (r9 - a3 * r8);
  return p;
}

/// How the alpha3 = 0 rule is evaluated. `as_printed` keeps the published
/// -2 sqrt(a8 a9) term; `consistent` uses +2 sqrt(a8 a9), which is the sign
/// that makes s^{a12} e^{a13 s} L_n(a11 s) an actual solution.
enum class LimitForm { as_printed, consistent };

inline double quantization_residual_limit(const NUParameterSet& p, unsigned n,
                                          LimitForm form = LimitForm::as_printed) {
  if (p.alpha3() != 0.0) {
    throw error(errc::wrong_branch, "alpha3 = " + std::to_string(p.alpha3()) +
                                        " but the limit rule needs alpha3 = 0");
  }
  const double nn = n;
  const double a3 = p.alpha3();
  const double r8 = std::sqrt(p.alpha8);
  const double r9 = std::sqrt(p.alpha9);
  const double cross = (form == LimitForm::as_printed ? -2.0 : 2.0) * std::sqrt(p.alpha8 * p.alpha9);
  return (p.alpha2() - 2.0 * p.alpha5) * nn + (2.0 * nn + 1.0) * (r9 - a3 * r8) +
         nn * (nn - 1.0) * a3 + p.alpha7 + 2.0 * a3 * p.alpha8 + cross + p.alpha5;
}

/// First-solution rule. Dispatches to the limit rule when alpha3 = 0.
inline double quantization_residual(const NUParameterSet& p, unsigned n) {
  if (p.alpha3() == 0.0) return quantization_residual_limit(p, n);
  const double nn = n;
  const double a3 = p.alpha3();
  const double r8 = std::sqrt(p.alpha8);
  const double r9 = std::sqrt(p.alpha9);
  return p.alpha2() * nn - (2.0 * nn + 1.0) * p.alpha5 + (2.0 * nn + 1.0) * (r9 + a3 * r8) +
         nn * (nn - 1.0) * a3 + p.alpha7 + 2.0 * a3 * p.alpha8 + 2.0 * std::sqrt(p.alpha8 * p.alpha9);
}

/// Second independent solution.
inline double quantization_residual_second(const NUParameterSet& p, unsigned n) {
  const double nn = n;
  const double a3 = p.alpha3();
  const double r8 = std::sqrt(p.alpha8);
  const double r9 = std::sqrt(p.alpha9);
  return p.alpha2() * nn + (1.0 - 2.0 * nn) * p.alpha5 + (2.0 * nn + 1.0) * (r9 - a3 * r8) +
         nn * (nn - 1.0) * a3 + p.alpha7 + 2.0 * a3 * p.alpha8 - 2.0 * std::sqrt(p.alpha8 * p.alpha9);
}

enum class Branch { first, second, limit };
enum class Family { jacobi, laguerre };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::first: return "first";
    case Branch::second: return "second";
    case Branch::limit: return "limit";
  }
  return "?";
}

inline const char* to_string(Family f) { return f == Family::jacobi ? "jacobi" : "laguerre"; }

/// Shape of F(s) = s^{s_power} * tail(s) * poly(arg(s)).
///   jacobi:   tail = (1 - a3 s)^{tail_power},  poly = P_n^{(poly_a, poly_b)}(1 - 2 a3 s)
///   laguerre: tail = exp(tail_power * s),      poly = L_n^{(poly_a)}(arg_scale * s)
struct WaveDescriptor {
  Branch branch = Branch::first;
  Family family = Family::jacobi;
  unsigned n = 0;
  double alpha3 = 1.0;
  double s_power = 0.0;
  double tail_power = 0.0;
  double poly_a = 0.0;
  double poly_b = 0.0;
  double arg_scale = 0.0;
};

inline WaveDescriptor wave_descriptor(const NUParameterSet& p, unsigned n, Branch branch) {
  WaveDescriptor d;
  d.branch = branch;
  d.n = n;
  d.alpha3 = p.alpha3();
  if (branch == Branch::limit) {
    if (p.alpha3() != 0.0) {
      throw error(errc::wrong_branch, "limit descriptor needs alpha3 = 0");
    }
    d.family = Family::laguerre;
    d.s_power = p.alpha12;
    d.tail_power = p.alpha13;
    d.poly_a = p.alpha10 - 1.0;
    d.arg_scale = p.alpha11;
    return d;
  }
  if (p.alpha3() == 0.0) {
    throw error(errc::wrong_branch, "Jacobi descriptor needs alpha3 != 0");
  }
  const double a3 = p.alpha3();
  d.family = Family::jacobi;
  if (branch == Branch::first) {
    d.s_power = p.alpha12;
    d.tail_power = -p.alpha12 - p.alpha13 / a3;
    d.poly_a = p.alpha10 - 1.0;
    d.poly_b = p.alpha11 / a3 - p.alpha10 - 1.0;
  } else {
    // The starred alpha10 is used in the second Jacobi index as well; mixing
    // starred and unstarred values does not produce a solution.
    d.s_power = p.alpha12_star;
    d.tail_power = -p.alpha12_star - p.alpha13_star / a3;
    d.poly_a = p.alpha10_star - 1.0;
    d.poly_b = p.alpha11_star / a3 - p.alpha10_star - 1.0;
  }
  return d;
}

}  // namespace hulthen::nu
