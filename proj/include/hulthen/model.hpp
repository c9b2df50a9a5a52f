#pragma once

// Physical layer: parameters, the deformed Hulthen shape, the mass function,
// the s-variable map and the coefficient assembly feeding the NU engine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <utility>

#include "json.hpp"

#include "hulthen/error.hpp"
#include "hulthen/nu_core.hpp"

namespace hulthen {

struct ModelParams {
  double beta = 1.0;
  double q = 1.0;
  double m0 = 1.0;
  double V0 = 0.0;
  double S0 = 0.0;
  double V1 = 0.0;
  double V2 = 0.0;
  int component = 1;

  double Q() const { return 1.0 / q; }
  // m_i: mass-function strength tied to the selected component.
  double mi() const { return component == 1 ? V0 + S0 : V0 - S0; }
  double Vi() const { return component == 1 ? V1 : V2; }
  // Sign of the pseudoscalar-derivative term: + for the upper, - for the lower component.
  double sigma() const { return component == 1 ? 1.0 : -1.0; }

  void validate() const {
    const double vals[] = {beta, q, m0, V0, S0, V1, V2};
    for (double v : vals) {
      if (!std::isfinite(v)) throw error(errc::invalid_parameter, "non-finite model parameter");
    }
    if (!(beta > 0.0)) throw error(errc::invalid_parameter, "beta must be positive");
    if (!(m0 > 0.0)) throw error(errc::invalid_parameter, "m0 must be positive");
    if (component != 1 && component != 2) {
      throw error(errc::invalid_parameter, "component must be 1 or 2");
    }
  }

  bool operator==(const ModelParams&) const = default;
};

inline void to_json(nlohmann::json& j, const ModelParams& p) {
  j = nlohmann::json{{"beta", p.beta}, {"q", p.q},   {"m0", p.m0}, {"V0", p.V0},
                     {"S0", p.S0},     {"V1", p.V1}, {"V2", p.V2}, {"component", p.component}};
}

inline void from_json(const nlohmann::json& j, ModelParams& p) {
  if (!j.is_object()) throw error(errc::invalid_parameter, "parameters must be a JSON object");
  static const std::set<std::string> known = {"beta", "q", "m0", "V0", "S0", "V1", "V2", "component"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) throw error(errc::invalid_parameter, "unknown key '" + it.key() + "'");
  }
  auto number = [&](const char* key, double& dst) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (!v.is_number()) throw error(errc::invalid_parameter, std::string("key '") + key + "' must be a number");
    dst = v.get<double>();
  };
  number("beta", p.beta);
  number("q", p.q);
  number("m0", p.m0);
  number("V0", p.V0);
  number("S0", p.S0);
  number("V1", p.V1);
  number("V2", p.V2);
  if (j.contains("component")) {
    const auto& c = j.at("component");
    if (!c.is_number_integer()) throw error(errc::invalid_parameter, "component must be an integer");
    p.component = c.get<int>();
  }
  p.validate();
}

inline ModelParams with_component(ModelParams p, int component) {
  p.component = component;
  return p;
}

/// The parameters of the published comparison table.
inline ModelParams table1_params(int component) {
  ModelParams p;
  p.beta = 1.0;
  p.q = 0.01;
  p.m0 = 50.0;
  p.V0 = 1.0;
  p.S0 = 2.0;
  p.V1 = 1.5;
  p.V2 = 1.5;
  p.component = component;
  return p;
}

namespace model {

/// e^{-2bx}/(q e^{-2bx} - 1), written as 1/(q - e^{2bx}) so neither tail overflows.
inline double shape(double x, const ModelParams& p) {
  const double g = std::exp(2.0 * p.beta * x);
  const double den = p.q - g;
  if (den == 0.0 || std::abs(den) <= 1e-15 * std::max(1.0, std::abs(p.q))) {
    throw error(errc::pole_at, "x = " + std::to_string(x));
  }
  if (std::isinf(g)) return 0.0;
  return 1.0 / den;
}

/// d/dx of the shape: 2b e^{2bx} / (q - e^{2bx})^2.
inline double shape_derivative(double x, const ModelParams& p) {
  const double f = shape(x, p);
  const double g = std::exp(2.0 * p.beta * x);
  if (std::isinf(g)) return 0.0;
  return 2.0 * p.beta * g * f * f;
}

inline double hulthen_potential(double x, double strength, const ModelParams& p) {
  return strength * shape(x, p);
}

struct SigmaDelta {
  double Sigma;
  double Delta;
};

inline SigmaDelta sigma_delta(double x, const ModelParams& p) {
  const double f = shape(x, p);
  return {(p.V0 - p.S0) * f, (p.V0 + p.S0) * f};
}

inline double mass_function(double x, const ModelParams& p) { return p.m0 + p.mi() * shape(x, p); }

/// s = 1/(1 - q e^{-2bx}); for q = 0 the exponential variable s = e^{-2bx} is used instead.
inline double map_to_s(double x, const ModelParams& p) {
  const double u = std::exp(-2.0 * p.beta * x);
  if (p.q == 0.0) return u;
  const double den = 1.0 - p.q * u;
  if (den == 0.0 || std::abs(den) <= 1e-15) throw error(errc::pole_at, "x = " + std::to_string(x));
  return 1.0 / den;
}

/// Inverse of map_to_s where it exists.
inline double map_to_x(double s, const ModelParams& p) {
  if (p.q == 0.0) {
    if (!(s > 0.0)) throw error(errc::out_of_domain, "s must be positive for q = 0");
    return -std::log(s) / (2.0 * p.beta);
  }
  const double u = (s - 1.0) / (p.q * s);
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw error(errc::out_of_domain, "s = " + std::to_string(s) + " has no preimage");
  }
  return -std::log(u) / (2.0 * p.beta);
}

template <class T>
struct CoefficientSet {
  T A{};
  T B{};
  T C{};
  double a = 0.0;  // a_i
  double b = 0.0;  // b_i
  double K = 0.0;  // Q^2[(m_i - S0)^2 - V0^2]
  double sigma = 1.0;
};

/// a_i, b_i and K do not depend on E.
inline CoefficientSet<double> static_coefficients(const ModelParams& p) {
  const double Q = p.Q();
  const double mi = p.mi();
  const double V = p.Vi();
  CoefficientSet<double> c;
  c.sigma = p.sigma();
  c.K = Q * Q * ((mi - p.S0) * (mi - p.S0) - p.V0 * p.V0);
  c.a = 2.0 * Q * p.m0 * mi + Q * Q * V * V + c.K - 2.0 * Q * p.m0 * (p.V0 + p.S0);
  c.b = Q * V * (c.sigma * p.beta + Q * V) + c.K - Q * p.m0 * (p.S0 + p.V0) + Q * p.m0 * mi;
  return c;
}

template <class T>
CoefficientSet<T> coefficients(const ModelParams& p, T E) {
  if (p.q == 0.0) throw error(errc::wrong_family, "coefficients need q != 0");
  const CoefficientSet<double> s = static_coefficients(p);
  const double Q = p.Q();
  const double V = p.Vi();
  CoefficientSet<T> c;
  c.a = s.a;
  c.b = s.b;
  c.K = s.K;
  c.sigma = s.sigma;
  const T m0(p.m0);
  c.A = m0 * m0 - E * E + T(2.0 * Q * p.V0) * (E + m0) + T(s.a);
  c.B = T(-Q * p.V0) * (E + m0) - T(s.b);
  c.C = T(2.0 * s.sigma * p.beta * Q * V + Q * Q * V * V + s.K);
  return c;
}

inline nu::CanonicalEquation canonical_equation(const ModelParams& p, double E) {
  const auto c = coefficients(p, E);
  const double f = 4.0 * p.beta * p.beta;
  nu::CanonicalEquation eq;
  eq.alpha1 = 1.0;
  eq.alpha2 = 2.0;
  eq.alpha3 = 1.0;
  eq.xi1 = c.C / f;
  eq.xi2 = -2.0 * c.B / f;
  eq.xi3 = c.A / f;
  return eq;
}

struct ExponentialCoefficients {
  double A;
  double B;
  double C;
};

/// Coefficients for q = 0, where s = e^{-2bx}. The beta*V_i term carries the
/// same component sign as the deformed case.
inline ExponentialCoefficients exponential_raw(const ModelParams& p, double E) {
  if (p.q != 0.0) throw error(errc::wrong_family, "exponential coefficients need q = 0");
  const double mi = p.mi();
  const double V = p.Vi();
  ExponentialCoefficients c;
  c.A = p.m0 * p.m0 - E * E;
  c.B = p.m0 * mi - p.m0 * p.S0 + E * p.V0 - p.sigma() * p.beta * V;
  c.C = V * V + (mi - p.S0) * (mi - p.S0) - p.V0 * p.V0;
  return c;
}

inline nu::CanonicalEquation exponential_coefficients(const ModelParams& p, double E) {
  const auto c = exponential_raw(p, E);
  const double f = 4.0 * p.beta * p.beta;
  nu::CanonicalEquation eq;
  eq.alpha1 = 1.0;
  eq.alpha2 = 0.0;
  eq.alpha3 = 0.0;
  eq.xi1 = c.C / f;
  eq.xi2 = 2.0 * c.B / f;
  eq.xi3 = c.A / f;
  return eq;
}

}  // namespace model
}  // namespace hulthen
