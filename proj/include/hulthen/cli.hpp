#pragma once

// Command-line front end. `run` takes streams so tests can drive it in process.
// Exit codes: 0 success, 1 empty or failing result, 2 usage or parameter error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hulthen/error.hpp"
#include "hulthen/model.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/verify.hpp"
#include "hulthen/wavefn.hpp"

namespace hulthen::cli {

enum exit_code : int { ok = 0, empty = 1, usage = 2 };

struct RunConfig {
  std::string command;
  std::optional<std::string> params_path;
  std::optional<int> component;
  std::optional<double> beta, q, m0, V0, S0, V1, V2;
  unsigned n_max = 4;
  std::string format = "csv";
  std::optional<std::string> out_path;
  std::optional<unsigned> panels;
  std::optional<double> energy_tolerance;
  double tolerance = 1e-2;
  bool json = false;
  std::string mode = "generic";
  std::string variant = "imag-beta";
  std::string lambda = "both";
  std::optional<double> energy;
  unsigned n = 0;
  unsigned samples = 401;
  std::string suite;
};

inline ModelParams load_params(const RunConfig& cfg) {
  ModelParams p;
  if (cfg.params_path) {
    std::ifstream in(*cfg.params_path);
    if (!in) throw error(errc::invalid_parameter, "cannot open " + *cfg.params_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw error(errc::invalid_parameter, std::string("malformed JSON: ") + e.what());
    }
    p = j.get<ModelParams>();
  }
  if (cfg.beta) p.beta = *cfg.beta;
  if (cfg.q) p.q = *cfg.q;
  if (cfg.m0) p.m0 = *cfg.m0;
  if (cfg.V0) p.V0 = *cfg.V0;
  if (cfg.S0) p.S0 = *cfg.S0;
  if (cfg.V1) p.V1 = *cfg.V1;
  if (cfg.V2) p.V2 = *cfg.V2;
  if (cfg.component) p.component = *cfg.component;
  p.validate();
  return p;
}

namespace detail {

// Output goes to --out when given, else to the supplied stream.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : os_(&fallback) {
    if (path) {
      file_ = std::make_unique<std::ofstream>(*path);
      if (!*file_) throw error(errc::invalid_parameter, "cannot write " + *path);
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

inline void require_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") {
    throw error(errc::invalid_parameter, "--format must be csv or json");
  }
}

}  // namespace detail

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::require_format(cfg);
  const ModelParams p = load_params(cfg);
  SpectrumReport rep;
  if (cfg.mode == "generic") {
    spectrum::SolveOptions opt;
    if (cfg.panels) opt.panels = *cfg.panels;
    if (cfg.energy_tolerance) opt.energy_tolerance = *cfg.energy_tolerance;
    rep = spectrum::solve_levels(p, cfg.n_max, opt);
  } else if (cfg.mode == "spin") {
    rep = spectrum::solve_constant_mass(p, spectrum::Symmetry::spin, cfg.n_max);
  } else if (cfg.mode == "pseudospin") {
    rep = spectrum::solve_constant_mass(p, spectrum::Symmetry::pseudospin, cfg.n_max);
  } else if (cfg.mode == "nonrel") {
    rep = spectrum::solve_nonrelativistic(p, cfg.n_max);
  } else {
    throw error(errc::invalid_parameter, "--mode must be generic, spin, pseudospin or nonrel");
  }
  for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
  if (rep.levels.empty()) {
    err << "no levels found\n";
    return empty;
  }
  detail::Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    *sink << nlohmann::json(rep).dump(2) << '\n';
  } else {
    write_csv(*sink, rep);
  }
  return ok;
}

inline int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& ref = verify::table1_reference();
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  std::ostringstream table;
  table << std::left << std::setw(11) << "component" << std::setw(4) << "n" << std::setw(14) << "computed"
        << std::setw(14) << "published" << std::setw(14) << "deviation" << "verdict\n";
  for (int c : {1, 2}) {
    const auto rep = spectrum::solve_levels(table1_params(c), 4);
    for (unsigned n = 0; n < 5; ++n) {
      const double published = ref[c - 1][n];
      std::optional<double> best;
      for (const auto& l : rep.levels_for(n))
        if (!best || std::abs(l.E.real() - published) < std::abs(*best - published)) best = l.E.real();
      const double dev = best ? std::abs(*best - published) : std::numeric_limits<double>::quiet_NaN();
      const bool pass = best && dev <= cfg.tolerance;
      all = all && pass;
      nlohmann::json row{{"component", c}, {"n", n}, {"published", published}, {"pass", pass}};
      row["computed"] = best ? nlohmann::json(*best) : nlohmann::json(nullptr);
      row["deviation"] = best ? nlohmann::json(dev) : nlohmann::json(nullptr);
      rows.push_back(row);
      table << std::left << std::setw(11) << c << std::setw(4) << n << std::fixed << std::setprecision(5)
            << std::setw(14);
      if (best) {
        table << *best;
      } else {
        table << "none";
      }
      table << std::setw(14) << published << std::setw(14);
      if (best) {
        table << dev;
      } else {
        table << "-";
      }
      table << (pass ? "pass" : "FAIL") << '\n';
      table.unsetf(std::ios::floatfield);
    }
  }
  detail::Sink sink(cfg.out_path, out);
  if (cfg.json) {
    nlohmann::json j{{"tolerance", cfg.tolerance}, {"all_pass", all}, {"rows", rows}};
    if (!all) j["diagnostics"] = verify::suite_table1(cfg.tolerance).diagnostics;
    *sink << j.dump(2) << '\n';
  } else {
    *sink << table.str();
    if (!all) {
      for (const auto& d : verify::suite_table1(cfg.tolerance).diagnostics) *sink << "diag: " << d << '\n';
    }
  }
  if (!all) err << "table comparison outside tolerance " << cfg.tolerance << '\n';
  return all ? ok : empty;
}

inline int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::require_format(cfg);
  const ModelParams p = load_params(cfg);
  std::vector<wavefn::Sample> samples;
  nlohmann::json sidecar;
  if (p.q == 0.0) {
    if (!cfg.energy) {
      err << "error: q = 0 needs --energy (the exponential case has no built-in spectrum)\n";
      return usage;
    }
    const auto w = wavefn::exponential_wave(p, *cfg.energy, cfg.n);
    samples = wavefn::sample(w, p, cfg.samples);
    sidecar = {{"family", "laguerre"},           {"n", cfg.n},
               {"E", *cfg.energy},               {"s_power", w.descriptor.s_power},
               {"tail_power", w.descriptor.tail_power}, {"laguerre_a", w.descriptor.poly_a},
               {"arg_scale", w.descriptor.arg_scale},   {"ode_residual", wavefn::ode_residual(w)},
               {"normalized", false}};
  } else {
    WaveSpec w;
    if (cfg.energy) {
      w = wavefn::assemble_at_energy(p, *cfg.energy, cfg.n);
    } else {
      const auto rep = spectrum::solve_levels(p, cfg.n);
      const auto levels = rep.levels_for(cfg.n);
      if (levels.empty()) {
        err << "no level with n = " << cfg.n << '\n';
        return empty;
      }
      if (levels.size() > 1) err << "note: " << levels.size() << " levels share n; using the lowest\n";
      w = wavefn::assemble(p, levels.front());
    }
    samples = wavefn::sample(w, p, cfg.samples);
    sidecar = w;
    if (w.alpha_prime > 0.0 && w.beta_prime > 0.0) sidecar["ode_residual"] = wavefn::ode_residual(w, p);
  }
  sidecar["params"] = p;
  sidecar["sign_changes"] = wavefn::count_sign_changes(samples);
  detail::Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& s : samples) {
      nlohmann::json e{{"s", s.s}, {"re_phi", s.phi.real()}, {"im_phi", s.phi.imag()}};
      e["x"] = s.x ? nlohmann::json(*s.x) : nlohmann::json(nullptr);
      pts.push_back(e);
    }
    sidecar["samples"] = pts;
    *sink << sidecar.dump(2) << '\n';
  } else {
    wavefn::write_csv(*sink, samples);
    if (cfg.out_path) {
      std::ofstream side(*cfg.out_path + ".json");
      side << sidecar.dump(2) << '\n';
    } else {
      err << sidecar.dump() << '\n';
    }
  }
  return ok;
}

inline int cmd_pt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::require_format(cfg);
  const ModelParams p = load_params(cfg);
  const auto variant = spectrum::pt_variant_from_string(cfg.variant);
  spectrum::PtOptions opt;
  if (cfg.lambda == "both") {
    opt.lambda_filter = 0;
  } else if (cfg.lambda == "+1" || cfg.lambda == "1") {
    opt.lambda_filter = 1;
  } else if (cfg.lambda == "-1") {
    opt.lambda_filter = -1;
  } else {
    throw error(errc::invalid_parameter, "--lambda must be +1, -1 or both");
  }
  const auto rep = spectrum::solve_pt(p, cfg.n_max, variant, opt);
  if (rep.levels.empty()) {
    err << "no PT roots found\n";
    return empty;
  }
  detail::Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    *sink << nlohmann::json(rep).dump(2) << '\n';
  } else {
    auto& os = *sink;
    os << "n,re_E,im_E,branch,lambda,root_sign,real,paired,residual\n";
    os << std::setprecision(12);
    for (const auto& l : rep.levels) {
      os << l.n << ',' << l.E.real() << ',' << l.E.imag() << ',' << to_string(l.branch) << ','
         << (l.lambda ? *l.lambda : 0) << ',' << l.root_sign << ',' << (l.real ? 1 : 0) << ','
         << (l.paired ? 1 : 0) << ',' << l.residual << '\n';
    }
  }
  return ok;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = verify::suite_names();
  } else {
    names = {cfg.suite};
  }
  bool all = true;
  detail::Sink sink(cfg.out_path, out);
  for (const auto& name : names) {
    const auto r = verify::run_suite(name);
    all = all && r.passed();
    if (cfg.format == "json") {
      verify::write_jsonl(*sink, r);
    } else {
      verify::write_table(*sink, r);
    }
    if (!r.passed()) err << "suite " << name << ": " << r.failures() << " failing checks\n";
  }
  return all ? ok : empty;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirac levels and spinors for the deformed Hulthen potential with position-dependent mass"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--params", cfg.params_path, "JSON parameter file");
    sub->add_option("--component", cfg.component, "spinor component")->check(CLI::IsMember({1, 2}));
    sub->add_option("--beta", cfg.beta);
    sub->add_option("--q", cfg.q);
    sub->add_option("--m0", cfg.m0);
    sub->add_option("--V0", cfg.V0);
    sub->add_option("--S0", cfg.S0);
    sub->add_option("--V1", cfg.V1);
    sub->add_option("--V2", cfg.V2);
    sub->add_option("--nmax", cfg.n_max, "highest quantum number");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--out", cfg.out_path, "output file");
  };

  auto* spec = app.add_subcommand("spectrum", "bound levels");
  add_params(spec);
  spec->add_option("--mode", cfg.mode, "generic, spin, pseudospin or nonrel");
  spec->add_option("--panels", cfg.panels, "scan panels");
  spec->add_option("--energy-tolerance", cfg.energy_tolerance);

  auto* t1 = app.add_subcommand("table1", "compare with the published table");
  t1->add_option("--tolerance", cfg.tolerance, "absolute tolerance");
  t1->add_flag("--json", cfg.json);
  t1->add_option("--out", cfg.out_path);

  auto* wf = app.add_subcommand("wavefunction", "sampled spinor component");
  add_params(wf);
  wf->add_option("--n", cfg.n, "level index");
  wf->add_option("--energy", cfg.energy, "use this energy instead of solving");
  wf->add_option("--samples", cfg.samples);

  auto* pt = app.add_subcommand("pt", "PT-symmetric and pseudo-Hermitian levels");
  add_params(pt);
  pt->add_option("--variant", cfg.variant, "imag-beta or all-imag");
  pt->add_option("--lambda", cfg.lambda, "+1, -1 or both");

  auto* ver = app.add_subcommand("verify", "run a check suite");
  ver->add_option("--suite", cfg.suite, "suite name or all")->required();
  ver->add_option("--format", cfg.format, "table or json");
  ver->add_option("--out", cfg.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (spec->parsed()) return cmd_spectrum(cfg, out, err);
    if (t1->parsed()) return cmd_table1(cfg, out, err);
    if (wf->parsed()) return cmd_wavefunction(cfg, out, err);
    if (pt->parsed()) return cmd_pt(cfg, out, err);
    if (ver->parsed()) return cmd_verify(cfg, out, err);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace hulthen::cli
