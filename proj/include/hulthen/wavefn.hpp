#pragma once

// Spinor components as closed-form functions of s, their normalization and
// the residual of the s-space differential equation they must satisfy.

#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "json.hpp"

#include "hulthen/error.hpp"
#include "hulthen/model.hpp"
#include "hulthen/nu_core.hpp"
#include "hulthen/specfun.hpp"
#include "hulthen/spectrum.hpp"

namespace hulthen {

struct WaveSpec {
  // phi(s) = N s^{alpha'/2} (1-s)^{beta'/2} P_n^{(alpha',beta')}(1-2s)
  double alpha_prime = 0.0;
  double beta_prime = 0.0;
  // sqrt(m0^2 - E^2)/beta, kept to check the cancellation that makes it equal beta_prime.
  double beta_prime_direct = 0.0;
  unsigned n = 0;
  nu::Family family = nu::Family::jacobi;
  std::optional<double> norm_analytic;
  double norm_numeric = 0.0;
  EnergyLevel level;
  bool pt_flag = false;
  // Exponents actually used for PT states (negated, complex in general).
  cplx alpha_pt{0.0, 0.0};
  cplx beta_pt{0.0, 0.0};
  double beta = 1.0;  // screening parameter, enters the measure
  nu::CanonicalEquation equation;
  nu::WaveDescriptor descriptor;
};

inline void to_json(nlohmann::json& j, const WaveSpec& w) {
  j = nlohmann::json{{"alpha_prime", w.alpha_prime},
                     {"beta_prime", w.beta_prime},
                     {"beta_prime_direct", w.beta_prime_direct},
                     {"n", w.n},
                     {"family", nu::to_string(w.family)},
                     {"norm_numeric", w.norm_numeric},
                     {"pt", w.pt_flag},
                     {"level", w.level},
                     {"xi", {w.equation.xi1, w.equation.xi2, w.equation.xi3}}};
  j["norm_analytic"] = w.norm_analytic ? nlohmann::json(*w.norm_analytic) : nlohmann::json(nullptr);
  if (w.pt_flag) {
    j["alpha_pt"] = {{"re", w.alpha_pt.real()}, {"im", w.alpha_pt.imag()}};
    j["beta_pt"] = {{"re", w.beta_pt.real()}, {"im", w.beta_pt.imag()}};
  }
}

namespace wavefn {

inline void require_exponents(const WaveSpec& w) {
  if (!(w.alpha_prime > 0.0) || !(w.beta_prime > 0.0)) {
    throw error(errc::condition_violated, "normalization needs alpha' > 0 and beta' > 0 (alpha'=" +
                                              std::to_string(w.alpha_prime) +
                                              ", beta'=" + std::to_string(w.beta_prime) + ")");
  }
}

/// Integral of P_n^{(a',b')}(z)^2 (1-z)^{a'-1}(1+z)^{b'-1} over (-1,1) by Gauss-Jacobi.
inline double weighted_square_integral(const WaveSpec& w, unsigned npoints) {
  const auto rule = specfun::gauss_jacobi_rule(npoints, w.alpha_prime - 1.0, w.beta_prime - 1.0);
  return rule.integrate([&](double z) {
    const double P = specfun::jacobi_poly(w.n, w.alpha_prime, w.beta_prime, z);
    return P * P;
  });
}

/// N that makes the x-space norm equal one, from quadrature with 64 + 2n points.
inline double normalization_numeric(const WaveSpec& w) {
  require_exponents(w);
  const double I = weighted_square_integral(w, 64 + 2 * w.n);
  const double logN2 = std::log(w.beta) + (w.alpha_prime + w.beta_prime) * std::log(2.0) - std::log(I);
  return std::exp(0.5 * logN2);
}

/// Value of the x-space norm integral for a given N, recomputed with a
/// different rule size so it is not the same sum that defined N.
inline double norm_integral(const WaveSpec& w, double N, unsigned npoints = 0) {
  require_exponents(w);
  if (npoints == 0) npoints = 96 + 2 * w.n;
  const double I = weighted_square_integral(w, npoints);
  return std::exp(2.0 * std::log(N) - std::log(w.beta) - (w.alpha_prime + w.beta_prime) * std::log(2.0) +
                  std::log(I));
}

/// Closed-form N from the explicit Jacobi sum and the 3F2 integral:
///   N^2 = 2b (n!)^2 G(a+b) G(a+1)^2 / (G(n+a+1)^2 G(b) G(a)) / S,
///   S = sum_l (-n)_l (n+a+b+1)_l (a)_l / ((a+1)_l (a+b)_l l!)
///         3F2(-n, n+a+b+1, a+l; a+1, a+b+l; 1)
/// with a = alpha', b = beta'. For n = 0 this is 2b / B(a, b).
inline double normalization_analytic(const WaveSpec& w) {
  require_exponents(w);
  using specfun::log_gamma;
  const double a = w.alpha_prime;
  const double b = w.beta_prime;
  const unsigned n = w.n;
  const double log_pref = std::log(2.0 * w.beta) + 2.0 * log_gamma(n + 1.0) + log_gamma(a + b) +
                          2.0 * log_gamma(a + 1.0) - 2.0 * log_gamma(n + a + 1.0) - log_gamma(b) -
                          log_gamma(a);
  // The 3F2 values alternate and cancel by many digits once alpha' is large,
  // so the sum runs in 50-digit binary floating point.
  using wide = boost::multiprecision::cpp_bin_float_50;
  const wide A(a), B(b);
  wide sum(0);
  wide coef(1);
  for (unsigned l = 0; l <= n; ++l) {
    if (l > 0) {
      const wide lf(l - 1.0);
      coef *= (lf - wide(n)) * (wide(n) + A + B + 1 + lf) * (A + lf) / ((A + 1 + lf) * (A + B + lf) * (lf + 1));
    }
    sum += coef * specfun::hyp3f2_terminating_t<wide>(n, wide(n) + A + B + 1, A + wide(l), A + 1, A + B + wide(l));
  }
  const double S = static_cast<double>(sum);
  if (!(S > 0.0)) {
    throw error(errc::condition_violated, "normalization sum is not positive");
  }
  return std::exp(0.5 * (log_pref - std::log(S)));
}

/// The normalization product exactly as published, with Gamma(beta) read as
/// Gamma(beta'). Kept as a diagnostic: its Jacobi coefficients and its
/// prefactor do not follow from the integral, so it disagrees with quadrature
/// except by accident. Returns NaN when the product is negative.
inline double normalization_as_printed(const WaveSpec& w) {
  require_exponents(w);
  using specfun::log_gamma;
  const double a = w.alpha_prime;
  const double b = w.beta_prime;
  const unsigned n = w.n;
  const double log_g1 = std::log(2.0 * w.beta) + 2.0 * log_gamma(n + 1.0) + log_gamma(a + b) +
                        log_gamma(a + 1.0) - log_gamma(b) - log_gamma(n + a + 1.0);
  using wide = boost::multiprecision::cpp_bin_float_50;
  const wide A(a), B(b);
  wide sum(0);
  wide coef(1);  // (-n)_l (n+a+b+1)_l (n+a+1)_l / l!
  for (unsigned l = 0; l <= n; ++l) {
    if (l > 0) {
      const wide lf(l - 1.0);
      coef *= (lf - wide(n)) * (wide(n) + A + B + 1 + lf) * (wide(n) + A + 1 + lf) / (lf + 1);
    }
    sum += coef * specfun::hyp3f2_terminating_t<wide>(n, wide(n) + A + B + 1, A + wide(l), A + 1, A + B + wide(l));
  }
  const double S = static_cast<double>(sum);
  if (!(S > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(0.5 * (log_g1 - std::log(S)));
}

/// Wave function at an arbitrary real energy. No eigenvalue check: used for
/// normalization of tabulated energies and for perturbation tests.
inline WaveSpec assemble_at_energy(const ModelParams& p, double E, unsigned n) {
  if (p.q == 0.0) throw error(errc::wrong_family, "use exponential_wave for q = 0");
  WaveSpec w;
  w.n = n;
  w.beta = p.beta;
  w.level.n = n;
  w.level.E = E;
  w.level.component = p.component;
  w.equation = model::canonical_equation(p, E);
  nu::NUParameterSet set;
  try {
    set = nu::derive_params(w.equation);
  } catch (const error& e) {
    throw error(errc::invalid_level, std::string("no real exponents: ") + e.what());
  }
  w.descriptor = nu::wave_descriptor(set, n, nu::Branch::first);
  w.alpha_prime = w.descriptor.poly_a;
  w.beta_prime = w.descriptor.poly_b;
  const double r2 = p.m0 * p.m0 - E * E;
  w.beta_prime_direct = r2 >= 0.0 ? std::sqrt(r2) / p.beta : std::numeric_limits<double>::quiet_NaN();
  w.family = nu::Family::jacobi;
  if (w.alpha_prime > 0.0 && w.beta_prime > 0.0) {
    w.norm_numeric = normalization_numeric(w);
    try {
      w.norm_analytic = normalization_analytic(w);
    } catch (const error&) {
      w.norm_analytic.reset();
    }
  }
  return w;
}

/// Wave function of a solved level. Real levels get normalized Jacobi
/// profiles; PT levels get negated complex exponents and no normalization.
inline WaveSpec assemble(const ModelParams& params, const EnergyLevel& level, double tolerance = 1e-8) {
  ModelParams p = params;
  p.component = level.component;
  if (level.branch == LevelBranch::nonrel) {
    throw error(errc::invalid_level, "non-relativistic levels carry no Dirac spinor");
  }
  if (level.branch == LevelBranch::pt_imag_beta || level.branch == LevelBranch::pt_all_imag) {
    WaveSpec w;
    w.n = level.n;
    w.beta = p.beta;
    w.level = level;
    w.pt_flag = true;
    w.family = nu::Family::jacobi;
    const auto c = spectrum::pt_coefficients(
        p, level.branch == LevelBranch::pt_imag_beta ? spectrum::PtVariant::imag_beta
                                                     : spectrum::PtVariant::all_imag);
    const cplx m0(p.m0);
    const cplx E = level.E;
    const cplx A = m0 * m0 - E * E + 2.0 * p.Q() * p.V0 * (E + m0) + c.a;
    w.alpha_pt = -std::sqrt(A) / p.beta;
    w.beta_pt = -std::sqrt(m0 * m0 - E * E) / p.beta;
    return w;
  }
  if (!(level.residual <= tolerance) || !level.real) {
    throw error(errc::invalid_level, "level residual " + std::to_string(level.residual) +
                                         " exceeds " + std::to_string(tolerance));
  }
  const double E = level.E.real();
  if (!(std::abs(E) < p.m0)) throw error(errc::invalid_level, "edge or unbound energy");
  WaveSpec w = assemble_at_energy(p, E, level.n);
  w.level = level;
  if (!(w.alpha_prime > 0.0) || !(w.beta_prime > 0.0)) {
    throw error(errc::invalid_level, "exponents must be positive for a bound level");
  }
  return w;
}

/// phi(s), including N when the spec carries one.
inline cplx evaluate(const WaveSpec& w, double s) {
  if (w.pt_flag) {
    const cplx a = w.alpha_pt, b = w.beta_pt;
    const cplx env = std::exp(0.5 * a * std::log(cplx(s)) + 0.5 * b * std::log(cplx(1.0 - s)));
    return env * specfun::jacobi_poly<cplx>(w.n, a, b, cplx(1.0 - 2.0 * s));
  }
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double env = std::exp(0.5 * w.alpha_prime * std::log(s) + 0.5 * w.beta_prime * std::log1p(-s));
  const double N = w.norm_numeric > 0.0 ? w.norm_numeric : 1.0;
  return N * env * specfun::jacobi_poly(w.n, w.alpha_prime, w.beta_prime, 1.0 - 2.0 * s);
}

/// Relative residual of F'' + (1-2s)/(s(1-s)) F' - (x1 s^2 - x2 s + x3)/(s(1-s))^2 F
/// over 256 points of [0.05, 0.95]: the equation value divided by the sum of
/// the three term magnitudes at the same point, maximised over the grid.
/// Dividing by |F| alone would grow with xi through cancellation and say
/// nothing about whether the function solves the equation. Derivatives are exact.
inline double ode_residual(const WaveSpec& w, const ModelParams& /*p*/) {
  if (w.pt_flag || w.family != nu::Family::jacobi) {
    throw error(errc::invalid_level, "ODE residual is defined for real Jacobi levels");
  }
  if (!(w.alpha_prime > 0.0) || !(w.beta_prime > 0.0)) {
    throw error(errc::invalid_level, "exponents must be positive");
  }
  const double a = 0.5 * w.alpha_prime;
  const double c = 0.5 * w.beta_prime;
  const double pa = w.alpha_prime, pb = w.beta_prime;
  const auto& eq = w.equation;
  const unsigned npts = 256;
  double worst = 0.0;
  for (unsigned k = 0; k < npts; ++k) {
    const double s = 0.05 + 0.9 * k / (npts - 1);
    const double z = 1.0 - 2.0 * s;
    const double env = std::exp(a * std::log(s) + c * std::log1p(-s));
    const double L = a / s - c / (1.0 - s);              // env'/env
    const double dL = -a / (s * s) - c / ((1.0 - s) * (1.0 - s));
    const double P = specfun::jacobi_poly(w.n, pa, pb, z);
    const double Pz = specfun::jacobi_poly_derivative(w.n, pa, pb, z, 1);
    const double Pzz = specfun::jacobi_poly_derivative(w.n, pa, pb, z, 2);
    const double Ps = -2.0 * Pz;
    const double Pss = 4.0 * Pzz;
    const double g = env * P;
    const double g1 = env * (L * P + Ps);
    const double g2 = env * ((L * L + dL) * P + 2.0 * L * Ps + Pss);
    const double ss = s * (1.0 - s);
    const double t1 = (1.0 - 2.0 * s) / ss * g1;
    const double t2 = (eq.xi1 * s * s - eq.xi2 * s + eq.xi3) / (ss * ss) * g;
    const double scale = std::abs(g2) + std::abs(t1) + std::abs(t2);
    if (!(scale > 0.0)) continue;  // a node of F where every term vanishes
    worst = std::max(worst, std::abs(g2 + t1 - t2) / scale);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// q = 0: s = e^{-2bx}, phi = s^{sqrt(x3)} e^{-sqrt(x1) s} L_n^{2 sqrt(x3)}(2 sqrt(x1) s)

struct ExponentialWave {
  double E = 0.0;
  unsigned n = 0;
  nu::CanonicalEquation equation;
  nu::WaveDescriptor descriptor;

  double operator()(double s) const {
    if (!(s > 0.0)) return 0.0;
    const auto& d = descriptor;
    return std::exp(d.s_power * std::log(s) + d.tail_power * s) *
           specfun::laguerre_poly(d.n, d.poly_a, d.arg_scale * s);
  }

  /// Region holding the bulk of the profile.
  std::pair<double, double> support() const {
    const double k = std::max(descriptor.arg_scale, 1e-12);
    const double hi = (4.0 * n + 2.0 * descriptor.s_power + 30.0) / k;
    return {hi / 200.0, hi};
  }
};

inline ExponentialWave exponential_wave(const ModelParams& p, double E, unsigned n) {
  if (p.q != 0.0) throw error(errc::wrong_family, "exponential wave needs q = 0");
  ExponentialWave w;
  w.E = E;
  w.n = n;
  w.equation = model::exponential_coefficients(p, E);
  const auto set = nu::derive_params(w.equation);
  w.descriptor = nu::wave_descriptor(set, n, nu::Branch::limit);
  return w;
}

/// Residual of phi'' + phi'/s - (x1 s^2 - x2 s + x3)/s^2 phi on the support,
/// relative to the term magnitudes as in the Jacobi case.
inline double ode_residual(const ExponentialWave& w) {
  const auto [lo, hi] = w.support();
  const auto& d = w.descriptor;
  const auto& eq = w.equation;
  const unsigned npts = 256;
  double worst = 0.0;
  for (unsigned k = 0; k < npts; ++k) {
    const double s = lo + (hi - lo) * k / (npts - 1);
    const double env = std::exp(d.s_power * std::log(s) + d.tail_power * s);
    const double L = d.s_power / s + d.tail_power;
    const double dL = -d.s_power / (s * s);
    const double y = d.arg_scale * s;
    const double P = specfun::laguerre_poly(d.n, d.poly_a, y);
    const double Ps = d.arg_scale * specfun::laguerre_poly_derivative(d.n, d.poly_a, y, 1);
    const double Pss = d.arg_scale * d.arg_scale * specfun::laguerre_poly_derivative(d.n, d.poly_a, y, 2);
    const double g = env * P;
    const double g1 = env * (L * P + Ps);
    const double g2 = env * ((L * L + dL) * P + 2.0 * L * Ps + Pss);
    const double t1 = g1 / s;
    const double t2 = (eq.xi1 * s * s - eq.xi2 * s + eq.xi3) / (s * s) * g;
    const double scale = std::abs(g2) + std::abs(t1) + std::abs(t2);
    if (!(scale > 0.0)) continue;
    worst = std::max(worst, std::abs(g2 + t1 - t2) / scale);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Sampling and export

struct Sample {
  double s;
  std::optional<double> x;
  cplx phi;
};

inline std::vector<Sample> sample(const WaveSpec& w, const ModelParams& p, unsigned npoints = 401) {
  std::vector<Sample> out;
  out.reserve(npoints);
  for (unsigned k = 0; k < npoints; ++k) {
    const double s = (k + 1.0) / (npoints + 1.0);
    Sample smp{s, std::nullopt, evaluate(w, s)};
    try {
      smp.x = model::map_to_x(s, p);
    } catch (const error&) {
    }
    out.push_back(smp);
  }
  return out;
}

inline std::vector<Sample> sample(const ExponentialWave& w, const ModelParams& p, unsigned npoints = 401) {
  const auto [lo, hi] = w.support();
  std::vector<Sample> out;
  for (unsigned k = 0; k < npoints; ++k) {
    const double s = lo + (hi - lo) * k / (npoints - 1);
    out.push_back({s, model::map_to_x(s, p), w(s)});
  }
  return out;
}

/// Sign changes of Re(phi) along the samples, ignoring values that are
/// numerically zero.
inline unsigned count_sign_changes(const std::vector<Sample>& samples) {
  double peak = 0.0;
  for (const auto& s : samples) peak = std::max(peak, std::abs(s.phi.real()));
  const double floor = 1e-12 * peak;
  unsigned changes = 0;
  int last = 0;
  for (const auto& s : samples) {
    const double v = s.phi.real();
    if (std::abs(v) <= floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

inline void write_csv(std::ostream& os, const std::vector<Sample>& samples) {
  os << "s,x,re_phi,im_phi\n";
  os << std::setprecision(12);
  for (const auto& smp : samples) {
    os << smp.s << ',';
    if (smp.x) os << *smp.x;
    os << ',' << smp.phi.real() << ',' << smp.phi.imag() << '\n';
  }
}

}  // namespace wavefn
}  // namespace hulthen
