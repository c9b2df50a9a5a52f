#pragma once

// Eigenvalue solvers. Real levels come from a sign-change scan of the
// unsquared quantization condition followed by TOMS748 polishing; complex
// (PT) levels from a seeded, deflated Newton iteration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "json.hpp"

#include "hulthen/error.hpp"
#include "hulthen/model.hpp"

namespace hulthen {

using cplx = std::complex<double>;

enum class LevelBranch { generic, spin, pseudospin, nonrel, pt_imag_beta, pt_all_imag };

inline const char* to_string(LevelBranch b) {
  switch (b) {
    case LevelBranch::generic: return "generic";
    case LevelBranch::spin: return "spin";
    case LevelBranch::pseudospin: return "pseudospin";
    case LevelBranch::nonrel: return "nonrel";
    case LevelBranch::pt_imag_beta: return "pt_imag_beta";
    case LevelBranch::pt_all_imag: return "pt_all_imag";
  }
  return "?";
}

inline LevelBranch level_branch_from_string(const std::string& s) {
  static const std::map<std::string, LevelBranch> table = {
      {"generic", LevelBranch::generic},         {"spin", LevelBranch::spin},
      {"pseudospin", LevelBranch::pseudospin},   {"nonrel", LevelBranch::nonrel},
      {"pt_imag_beta", LevelBranch::pt_imag_beta}, {"pt_all_imag", LevelBranch::pt_all_imag}};
  auto it = table.find(s);
  if (it == table.end()) throw error(errc::invalid_parameter, "unknown branch '" + s + "'");
  return it->second;
}

struct EnergyLevel {
  unsigned n = 0;
  cplx E{0.0, 0.0};
  LevelBranch branch = LevelBranch::generic;
  std::optional<int> lambda;  // PT only
  int root_sign = 1;          // PT only: sign carried by the S1 + S2 pair
  double residual = 0.0;
  int component = 1;
  bool real = true;
  bool paired = false;

  double energy() const { return E.real(); }
};

struct SpectrumReport {
  ModelParams params;
  std::vector<EnergyLevel> levels;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> warnings;

  std::vector<EnergyLevel> levels_for(unsigned n) const {
    std::vector<EnergyLevel> out;
    for (const auto& l : levels)
      if (l.n == n) out.push_back(l);
    return out;
  }
};

inline void to_json(nlohmann::json& j, const EnergyLevel& l) {
  j = nlohmann::json{{"n", l.n},
                     {"E", {{"re", l.E.real()}, {"im", l.E.imag()}}},
                     {"branch", to_string(l.branch)},
                     {"residual", l.residual},
                     {"component", l.component},
                     {"real", l.real},
                     {"paired", l.paired},
                     {"root_sign", l.root_sign}};
  j["lambda"] = l.lambda ? nlohmann::json(*l.lambda) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, EnergyLevel& l) {
  l.n = j.at("n").get<unsigned>();
  l.E = cplx(j.at("E").at("re").get<double>(), j.at("E").at("im").get<double>());
  l.branch = level_branch_from_string(j.at("branch").get<std::string>());
  l.residual = j.at("residual").get<double>();
  l.component = j.at("component").get<int>();
  l.real = j.at("real").get<bool>();
  l.paired = j.at("paired").get<bool>();
  l.root_sign = j.value("root_sign", 1);
  if (j.contains("lambda") && !j.at("lambda").is_null()) l.lambda = j.at("lambda").get<int>();
}

inline void to_json(nlohmann::json& j, const SpectrumReport& r) {
  j = nlohmann::json{{"params", r.params},
                     {"levels", r.levels},
                     {"diagnostics", r.diagnostics},
                     {"warnings", r.warnings}};
}

inline void from_json(const nlohmann::json& j, SpectrumReport& r) {
  r.params = j.at("params").get<ModelParams>();
  r.levels = j.at("levels").get<std::vector<EnergyLevel>>();
  r.diagnostics = j.at("diagnostics").get<std::map<std::string, double>>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

/// Real levels only; 12 significant digits.
inline void write_csv(std::ostream& os, const SpectrumReport& r) {
  os << "n,E,branch,residual\n";
  for (const auto& l : r.levels) {
    if (!l.real) continue;
    os << l.n << ',' << std::setprecision(12) << l.E.real() << ',' << to_string(l.branch) << ','
       << std::setprecision(12) << l.residual << '\n';
  }
}

namespace spectrum {

struct SolveOptions {
  unsigned panels = 4096;
  double energy_tolerance = 1e-12;
  double residual_tolerance = 1e-10;
};

namespace detail {

struct RealPieces {
  double S1;
  double S2;
  double bracket;  // right-hand side before the square root
};

// Radicand of the first square root as a function of E: -E^2 + 2 c1 E + c0.
struct Radicand {
  double c1 = 0.0;
  double c0 = 0.0;
  double operator()(double E) const { return -E * E + 2.0 * c1 * E + c0; }
  double magnitude(double E) const { return E * E + std::abs(2.0 * c1 * E) + std::abs(c0); }
};

// Rounding can leave a radicand a few ulps below zero at the window edge.
inline double clamp_radicand(double value, double magnitude) {
  if (value >= 0.0) return value;
  if (value >= -1e-13 * magnitude) return 0.0;
  return std::numeric_limits<double>::quiet_NaN();
}

inline Radicand generic_radicand(const ModelParams& p) {
  const double Q = p.Q();
  const auto s = model::static_coefficients(p);
  return {Q * p.V0, p.m0 * p.m0 + 2.0 * Q * p.V0 * p.m0 + s.a};
}

inline double generic_bracket(const ModelParams& p) {
  const double sb = p.sigma() * p.beta + p.Q() * p.Vi();
  return sb * sb + model::static_coefficients(p).K;
}

// Interval of E inside (-m0, m0) where both radicands are nonnegative.
inline std::optional<std::pair<double, double>> admissible(const Radicand& r, double m0) {
  const double disc = r.c1 * r.c1 + r.c0;
  if (disc < 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  const double eps = 1e-9 * m0;
  const double lo = std::max(-m0 + eps, r.c1 - root);
  const double hi = std::min(m0 - eps, r.c1 + root);
  if (!(lo < hi)) return std::nullopt;
  return std::make_pair(lo, hi);
}

struct Toms748Tol {
  double abs_tol;
  bool operator()(double a, double b) const {
    const double scale = 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
    return std::abs(b - a) <= std::max(abs_tol, scale);
  }
};

struct ScanStats {
  double brackets = 0.0;
  double iterations = 0.0;
};

// All roots of f on [lo, hi] by panel scan plus TOMS748.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, unsigned panels, double tol,
                               ScanStats& stats) {
  std::vector<double> roots;
  if (!(lo < hi) || panels == 0) return roots;
  const double h = (hi - lo) / panels;
  double x0 = lo;
  double f0 = f(x0);
  for (unsigned k = 1; k <= panels; ++k) {
    const double x1 = (k == panels) ? hi : lo + k * h;
    const double f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1)) {
      if (f0 == 0.0) {
        roots.push_back(x0);
      } else if (f0 * f1 < 0.0) {
        stats.brackets += 1.0;
        std::uintmax_t it = 200;
        const auto r = boost::math::tools::toms748_solve(f, x0, x1, f0, f1, Toms748Tol{tol}, it);
        stats.iterations += static_cast<double>(it);
        roots.push_back(0.5 * (r.first + r.second));
      }
    }
    x0 = x1;
    f0 = f1;
  }
  if (std::isfinite(f0) && f0 == 0.0) roots.push_back(x0);
  return roots;
}

inline void sort_and_dedupe(std::vector<EnergyLevel>& levels) {
  std::sort(levels.begin(), levels.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.E.real() != b.E.real()) return a.E.real() < b.E.real();
    return a.E.imag() < b.E.imag();
  });
  std::vector<EnergyLevel> out;
  for (const auto& l : levels) {
    bool dup = false;
    for (const auto& o : out) {
      if (o.n == l.n && o.branch == l.branch && o.lambda == l.lambda && o.root_sign == l.root_sign &&
          std::abs(o.E - l.E) <= 1e-8 * std::max(1.0, std::abs(l.E))) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(l);
  }
  levels = std::move(out);
}

}  // namespace detail

/// Both square roots and the bracket of the generic condition at E.
inline detail::RealPieces real_pieces(const ModelParams& p, double E) {
  if (p.q == 0.0) throw error(errc::wrong_family, "q = 0 has no closed-form spectrum");
  const double r2 = p.m0 * p.m0 - E * E;
  if (r2 < 0.0) throw error(errc::out_of_domain, "m0^2 - E^2 < 0 at E = " + std::to_string(E));
  const double r1 = detail::generic_radicand(p)(E);
  if (r1 < 0.0) throw error(errc::out_of_domain, "A < 0 at E = " + std::to_string(E));
  return {std::sqrt(r1), std::sqrt(r2), detail::generic_bracket(p)};
}

/// [S1 + S2 + b(2n+1)]^2 - bracket, with the component sign folded into the bracket.
inline double energy_residual(const ModelParams& p, double E, unsigned n) {
  const auto r = real_pieces(p, E);
  const double lhs = r.S1 + r.S2 + p.beta * (2.0 * n + 1.0);
  return lhs * lhs - r.bracket;
}

/// S1 + S2 + b(2n+1) - sqrt(bracket): the condition before squaring. Only the
/// positive root of the bracket can be matched since the left side is positive.
inline double energy_residual_unsquared(const ModelParams& p, double E, unsigned n) {
  const auto r = real_pieces(p, E);
  if (r.bracket < 0.0) throw error(errc::out_of_domain, "bracket < 0");
  return r.S1 + r.S2 + p.beta * (2.0 * n + 1.0) - std::sqrt(r.bracket);
}

/// The per-component forms written out explicitly for each component instead of
/// going through the generic a_i and bracket.
inline double energy_residual_explicit(const ModelParams& p, double E, unsigned n) {
  const double Q = 1.0 / p.q;
  const double m0 = p.m0;
  const double r2 = m0 * m0 - E * E;
  if (r2 < 0.0) throw error(errc::out_of_domain, "m0^2 - E^2 < 0");
  double a = 0.0;
  double bracket = 0.0;
  if (p.component == 1) {
    a = Q * Q * p.V1 * p.V1;
    bracket = (p.beta + Q * p.V1) * (p.beta + Q * p.V1);
  } else {
    const double shift = 4.0 * Q * Q * p.S0 * (p.V0 - p.S0);
    a = -4.0 * Q * m0 * p.S0 + Q * Q * p.V2 * p.V2 - shift;
    bracket = (-p.beta + Q * p.V2) * (-p.beta + Q * p.V2) - shift;
  }
  const double r1 = r2 + 2.0 * Q * p.V0 * (E + m0) + a;
  if (r1 < 0.0) throw error(errc::out_of_domain, "A < 0");
  const double lhs = std::sqrt(r1) + std::sqrt(r2) + p.beta * (2.0 * n + 1.0);
  return lhs * lhs - bracket;
}

/// Magnitude of the terms entering energy_residual, used to scale comparisons.
inline double residual_scale(const ModelParams& p, double E, unsigned n) {
  const auto r = real_pieces(p, E);
  const double lhs = r.S1 + r.S2 + p.beta * (2.0 * n + 1.0);
  return lhs * lhs + std::abs(r.bracket);
}

namespace detail {

inline void n_bound_warning(const ModelParams& p, const EnergyLevel& l, SpectrumReport& rep) {
  // The bound n < [A/beta] mixes units; it is reported, never enforced.
  const double A = model::coefficients(p, l.E.real()).A;
  const double bound = std::floor(A / p.beta);
  if (static_cast<double>(l.n) >= bound) {
    rep.warnings.push_back("n=" + std::to_string(l.n) + " exceeds the [A/beta] bound " +
                           std::to_string(bound));
  }
}

}  // namespace detail

inline SpectrumReport solve_levels(const ModelParams& p, unsigned n_max, const SolveOptions& opt = {}) {
  p.validate();
  if (p.q == 0.0) throw error(errc::wrong_family, "q = 0 has no closed-form spectrum; use the oracle");
  SpectrumReport rep;
  rep.params = p;
  rep.diagnostics["panels"] = opt.panels;
  const double bracket = detail::generic_bracket(p);
  const detail::Radicand rad = detail::generic_radicand(p);
  const auto window = detail::admissible(rad, p.m0);
  detail::ScanStats stats;
  if (bracket < 0.0) {
    rep.warnings.push_back("bracket is negative; no real levels");
  } else if (!window) {
    rep.warnings.push_back("no energy in (-m0, m0) keeps both radicands nonnegative");
  } else {
    rep.diagnostics["window_lo"] = window->first;
    rep.diagnostics["window_hi"] = window->second;
    const double rb = std::sqrt(bracket);
    for (unsigned n = 0; n <= n_max; ++n) {
      auto f = [&](double E) {
        const double r1 = detail::clamp_radicand(rad(E), rad.magnitude(E));
        const double r2 = detail::clamp_radicand(p.m0 * p.m0 - E * E, p.m0 * p.m0);
        if (std::isnan(r1) || std::isnan(r2)) return r1 + r2;
        return std::sqrt(r1) + std::sqrt(r2) + p.beta * (2.0 * n + 1.0) - rb;
      };
      for (double E : detail::scan_roots(f, window->first, window->second, opt.panels,
                                         opt.energy_tolerance, stats)) {
        EnergyLevel l;
        l.n = n;
        l.E = E;
        l.branch = LevelBranch::generic;
        l.residual = std::abs(f(E));
        l.component = p.component;
        if (l.residual > opt.residual_tolerance) {
          rep.warnings.push_back("n=" + std::to_string(n) + " root at E=" + std::to_string(E) +
                                 " has residual " + std::to_string(l.residual));
          continue;
        }
        detail::n_bound_warning(p, l, rep);
        rep.levels.push_back(l);
      }
    }
  }
  rep.diagnostics["brackets"] = stats.brackets;
  rep.diagnostics["iterations"] = stats.iterations;
  detail::sort_and_dedupe(rep.levels);
  return rep;
}

enum class Symmetry { spin, pseudospin };

/// `consistent` follows the generic lower-component condition at V0 = S0
/// (+b(2n+1), bracket (-b + Q V2)^2); `as_printed` keeps the flipped
/// -b(2n+1) term and the (b + Q V)^2 bracket of the published pseudospin form.
enum class PseudospinForm { consistent, as_printed };

inline SpectrumReport solve_constant_mass(ModelParams p, Symmetry symmetry, unsigned n_max,
                                          PseudospinForm form = PseudospinForm::consistent,
                                          const SolveOptions& opt = {}) {
  p.validate();
  if (p.q == 0.0) throw error(errc::wrong_family, "constant-mass forms need q != 0");
  const double scale = std::max({1.0, std::abs(p.V0), std::abs(p.S0)});
  if (symmetry == Symmetry::spin) {
    if (std::abs(p.V0 + p.S0) > 1e-12 * scale) {
      throw error(errc::symmetry_violation, "spin symmetry needs V0 = -S0");
    }
    p.component = 1;
  } else {
    if (std::abs(p.V0 - p.S0) > 1e-12 * scale) {
      throw error(errc::symmetry_violation, "pseudospin symmetry needs V0 = S0");
    }
    p.component = 2;
  }

  const double Q = p.Q();
  const double m0 = p.m0;
  double a = 0.0;
  double bracket = 0.0;
  double nsign = 1.0;
  if (symmetry == Symmetry::spin) {
    a = Q * Q * p.V1 * p.V1;
    bracket = (p.beta + Q * p.V1) * (p.beta + Q * p.V1);
  } else if (form == PseudospinForm::consistent) {
    a = -4.0 * Q * m0 * p.S0 + Q * Q * p.V2 * p.V2;
    bracket = (-p.beta + Q * p.V2) * (-p.beta + Q * p.V2);
  } else {
    a = -4.0 * Q * m0 * p.S0 + Q * Q * p.V2 * p.V2;
    bracket = (p.beta + Q * p.V2) * (p.beta + Q * p.V2);
    nsign = -1.0;
  }
  const detail::Radicand rad{Q * p.V0, m0 * m0 + 2.0 * Q * p.V0 * m0 + a};
  const double rb = std::sqrt(bracket);

  SpectrumReport rep;
  rep.params = p;
  rep.diagnostics["panels"] = opt.panels;
  detail::ScanStats stats;
  const auto window = detail::admissible(rad, m0);
  if (window) {
    for (unsigned n = 0; n <= n_max; ++n) {
      const double shift = nsign * p.beta * (2.0 * n + 1.0);
      auto f = [&](double E) {
        const double r1 = detail::clamp_radicand(rad(E), rad.magnitude(E));
        const double r2 = detail::clamp_radicand(m0 * m0 - E * E, m0 * m0);
        if (std::isnan(r1) || std::isnan(r2)) return r1 + r2;
        return std::sqrt(r1) + std::sqrt(r2) + shift - rb;
      };
      for (double E : detail::scan_roots(f, window->first, window->second, opt.panels,
                                         opt.energy_tolerance, stats)) {
        const bool keep = symmetry == Symmetry::spin ? E > 0.0 : E < 0.0;
        if (!keep) continue;
        EnergyLevel l;
        l.n = n;
        l.E = E;
        l.branch = symmetry == Symmetry::spin ? LevelBranch::spin : LevelBranch::pseudospin;
        l.residual = std::abs(f(E));
        l.component = p.component;
        if (l.residual > opt.residual_tolerance) continue;
        rep.levels.push_back(l);
      }
    }
  }
  rep.diagnostics["brackets"] = stats.brackets;
  rep.diagnostics["iterations"] = stats.iterations;
  if (symmetry == Symmetry::pseudospin && form == PseudospinForm::as_printed) {
    rep.warnings.push_back("pseudospin levels from the published -b(2n+1) form");
  }
  detail::sort_and_dedupe(rep.levels);
  return rep;
}

/// One of the two algebraic solutions of the squared non-relativistic condition.
struct NonrelCandidate {
  unsigned n = 0;
  int sign = 1;        // which root of the bracket the unsquared sum equals
  double E = 0.0;      // candidate energy (NaN when the quadratic has no solution)
  bool negative = false;
  bool radicands_ok = false;
  bool unsquared_ok = false;
  bool accepted() const { return negative && radicands_ok && unsquared_ok; }
};

/// sqrt(t^2 + c) + t = R with t = sqrt(-2 m0 E) gives t = (R^2 - c)/(2R).
inline std::vector<NonrelCandidate> nonrel_candidates(const ModelParams& p, unsigned n) {
  p.validate();
  if (p.q == 0.0) throw error(errc::wrong_family, "q = 0 has no closed-form spectrum");
  const double Q = p.Q();
  const double c = 4.0 * Q * p.m0 * p.V0 + model::static_coefficients(p).a;
  const double bracket = detail::generic_bracket(p);
  std::vector<NonrelCandidate> out;
  for (int sign : {+1, -1}) {
    NonrelCandidate k;
    k.n = n;
    k.sign = sign;
    k.E = std::numeric_limits<double>::quiet_NaN();
    if (bracket >= 0.0) {
      const double R = sign * std::sqrt(bracket) - p.beta * (2.0 * n + 1.0);
      if (R != 0.0) {
        const double t = (R * R - c) / (2.0 * R);
        k.E = -t * t / (2.0 * p.m0);
        k.negative = k.E < 0.0;
        k.radicands_ok = t >= 0.0 && t * t + c >= 0.0;
        // sqrt(t^2 + c) must equal R - t, which needs R - t >= 0.
        k.unsquared_ok = k.radicands_ok && R - t >= 0.0;
      }
    }
    out.push_back(k);
  }
  return out;
}

inline double nonrel_residual(const ModelParams& p, double E, unsigned n) {
  const double c = 4.0 * p.Q() * p.m0 * p.V0 + model::static_coefficients(p).a;
  const double r2 = -2.0 * p.m0 * E;
  const double r1 = r2 + c;
  if (r1 < 0.0 || r2 < 0.0) throw error(errc::out_of_domain, "non-relativistic radicand < 0");
  const double lhs = std::sqrt(r1) + std::sqrt(r2) + p.beta * (2.0 * n + 1.0);
  return lhs * lhs - detail::generic_bracket(p);
}

inline SpectrumReport solve_nonrelativistic(const ModelParams& p, unsigned n_max) {
  SpectrumReport rep;
  rep.params = p;
  double rejected = 0.0;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (const auto& k : nonrel_candidates(p, n)) {
      if (!k.accepted()) {
        rejected += 1.0;
        continue;
      }
      EnergyLevel l;
      l.n = n;
      l.E = k.E;
      l.branch = LevelBranch::nonrel;
      l.component = p.component;
      const double c = 4.0 * p.Q() * p.m0 * p.V0 + model::static_coefficients(p).a;
      const double r2 = -2.0 * p.m0 * k.E;
      l.residual = std::abs(std::sqrt(std::max(0.0, r2 + c)) + std::sqrt(r2) +
                            p.beta * (2.0 * n + 1.0) - std::sqrt(detail::generic_bracket(p)));
      rep.levels.push_back(l);
    }
  }
  rep.diagnostics["rejected_candidates"] = rejected;
  detail::sort_and_dedupe(rep.levels);
  return rep;
}

// ---------------------------------------------------------------------------
// PT-symmetric and pseudo-Hermitian forms

enum class PtVariant { imag_beta, all_imag };

inline const char* to_string(PtVariant v) { return v == PtVariant::imag_beta ? "imag-beta" : "all-imag"; }

inline PtVariant pt_variant_from_string(const std::string& s) {
  if (s == "imag-beta" || s == "imag_beta") return PtVariant::imag_beta;
  if (s == "all-imag" || s == "all_imag") return PtVariant::all_imag;
  throw error(errc::invalid_parameter, "unknown PT variant '" + s + "'");
}

struct PtCoefficients {
  cplx a;
  cplx gamma;
};

inline PtCoefficients pt_coefficients(const ModelParams& p, PtVariant variant) {
  const double Q = p.Q();
  const double mi = p.mi();
  const double V = p.Vi();
  const cplx I(0.0, 1.0);
  if (variant == PtVariant::imag_beta) {
    const auto s = model::static_coefficients(p);
    const cplx t = I * (p.sigma() * p.beta) + Q * V;
    return {cplx(s.a), t * t + s.K};
  }
  const cplx w = (cplx(mi) - I * p.S0) * (cplx(mi) - I * p.S0) + p.V0 * p.V0;
  const cplx a = -2.0 * p.m0 * Q * (p.V0 + p.S0) - 2.0 * I * Q * p.m0 * mi - Q * Q * w - Q * Q * V * V;
  const cplx g = -(p.beta - Q * V) * (p.beta - Q * V) + Q * Q * w;
  return {a, g};
}

namespace detail {

// Residual with the E-independent pieces evaluated once.
struct PtFunction {
  double m0, QV0, beta_term;
  cplx a, lambda_root;
  double sign;

  PtFunction(const ModelParams& p, unsigned n, int lambda, PtVariant variant, int root_sign) {
    const auto c = pt_coefficients(p, variant);
    m0 = p.m0;
    QV0 = p.Q() * p.V0;
    beta_term = p.beta * (2.0 * n + 1.0);
    a = c.a;
    lambda_root = static_cast<double>(lambda) * std::sqrt(c.gamma);
    sign = static_cast<double>(root_sign);
  }

  cplx operator()(cplx E) const {
    const cplx r2 = m0 * m0 - E * E;
    const cplx A = r2 + 2.0 * QV0 * (E + m0) + a;
    return sign * (std::sqrt(A) + std::sqrt(r2)) + cplx(0.0, beta_term) + lambda_root;
  }
};

}  // namespace detail

/// root_sign * (S1 + S2) + i b (2n+1) + lambda sqrt(Gamma), principal square roots.
/// root_sign = -1 selects the other determination of the S1 + S2 pair, which
/// together with lambda gives the four combinations.
inline cplx pt_residual(const ModelParams& p, cplx E, unsigned n, int lambda, PtVariant variant,
                        int root_sign = 1) {
  return detail::PtFunction(p, n, lambda, variant, root_sign)(E);
}

struct PtOptions {
  unsigned grid = 64;
  int lambda_filter = 0;  // 0 = both
  unsigned max_iter = 80;
  double residual_tolerance = 1e-10;
};

namespace detail {

template <class F>
std::optional<cplx> damped_newton(F&& f, cplx z, unsigned max_iter) {
  cplx fz = f(z);
  for (unsigned it = 0; it < max_iter; ++it) {
    if (!std::isfinite(std::abs(fz))) return std::nullopt;
    const double h = 1e-7 * (1.0 + std::abs(z));
    const cplx d = (f(z + h) - f(z - h)) / (2.0 * h);
    if (d == cplx(0.0) || !std::isfinite(std::abs(d))) return std::nullopt;
    const cplx dz = fz / d;
    double t = 1.0;
    cplx zn = z - dz;
    cplx fn = f(zn);
    while (!(std::abs(fn) < std::abs(fz)) && t > 1e-6) {
      t *= 0.5;
      zn = z - t * dz;
      fn = f(zn);
    }
    if (!(std::abs(fn) < std::abs(fz))) return std::nullopt;  // stalled
    const double step = std::abs(zn - z);
    z = zn;
    fz = fn;
    if (step <= 1e-14 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace detail

/// All roots for one (n, lambda, root_sign) cell.
inline std::vector<cplx> pt_roots(const ModelParams& p, unsigned n, int lambda, int root_sign,
                                  PtVariant variant, const PtOptions& opt = {}) {
  std::vector<cplx> roots;
  const detail::PtFunction F(p, n, lambda, variant, root_sign);
  const double L = 2.0 * p.m0;
  const unsigned g = std::max(2u, opt.grid);
  for (unsigned ix = 0; ix < g; ++ix) {
    for (unsigned iy = 0; iy < g; ++iy) {
      const cplx seed(-L + 2.0 * L * ix / (g - 1), -L + 2.0 * L * iy / (g - 1));
      auto deflated = [&](cplx E) {
        cplx v = F(E);
        for (const cplx& r : roots) v /= (E - r);
        return v;
      };
      auto z = detail::damped_newton(deflated, seed, opt.max_iter);
      if (!z) continue;
      // A few undeflated steps remove the deflation bias.
      auto polished = detail::damped_newton(F, *z, 8);
      if (polished) z = polished;
      const cplx E = *z;
      if (std::abs(F(E)) > opt.residual_tolerance) continue;
      if (std::abs(E.real()) > 1.5 * L || std::abs(E.imag()) > 1.5 * L) continue;
      // Edge roots |E| = m0 kill the sqrt(m0^2 - E^2) factor; rejected.
      if (std::abs(p.m0 * p.m0 - E * E) <= 1e-6 * p.m0 * p.m0) continue;
      bool dup = false;
      for (const cplx& r : roots) {
        if (std::abs(E - r) <= 1e-6 * (1.0 + std::abs(E))) {
          dup = true;
          break;
        }
      }
      if (!dup) roots.push_back(E);
    }
  }
  return roots;
}

inline bool pt_is_real(cplx E) { return std::abs(E.imag()) <= 1e-8 * std::max(1.0, std::abs(E.real())); }

inline SpectrumReport solve_pt(const ModelParams& p, unsigned n_max, PtVariant variant,
                               const PtOptions& opt = {}) {
  p.validate();
  if (p.q == 0.0) throw error(errc::wrong_family, "PT forms need q != 0");
  SpectrumReport rep;
  rep.params = p;
  rep.diagnostics["grid"] = opt.grid;
  // Conjugate partners can sit one quantum number higher, so the search runs
  // one level past n_max and the extra level is used only for pairing.
  std::vector<EnergyLevel> all;
  for (unsigned n = 0; n <= n_max + 1; ++n) {
    for (int lambda : {+1, -1}) {
      for (int eps : {+1, -1}) {
        for (const cplx& E : pt_roots(p, n, lambda, eps, variant, opt)) {
          EnergyLevel l;
          l.n = n;
          l.E = E;
          l.branch = variant == PtVariant::imag_beta ? LevelBranch::pt_imag_beta : LevelBranch::pt_all_imag;
          l.lambda = lambda;
          l.root_sign = eps;
          l.residual = std::abs(pt_residual(p, E, n, lambda, variant, eps));
          l.component = p.component;
          l.real = pt_is_real(E);
          all.push_back(l);
        }
      }
    }
  }
  double unpaired = 0.0;
  for (auto& l : all) {
    if (l.real) continue;
    for (const auto& o : all) {
      if (std::abs(o.E - std::conj(l.E)) <= 1e-6 * std::max(1.0, std::abs(l.E))) {
        l.paired = true;
        break;
      }
    }
  }
  for (const auto& l : all) {
    if (l.n > n_max) continue;
    if (opt.lambda_filter != 0 && l.lambda != opt.lambda_filter) continue;
    if (!l.real && !l.paired) unpaired += 1.0;
    rep.levels.push_back(l);
  }
  rep.diagnostics["unpaired_complex"] = unpaired;
  detail::sort_and_dedupe(rep.levels);
  return rep;
}

}  // namespace spectrum
}  // namespace hulthen
