#include <cmath>

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/wavefn.hpp"

using namespace hulthen;

namespace {
ModelParams spin_params() { return ModelParams{0.3, -1.0, 5.0, 1.0, -1.0, -4.0, 0.0, 1}; }
}  // namespace

// At the published n = 0 energy of component 1: alpha' = sqrt(A)/beta,
// beta' = sqrt(m0^2 - E^2)/beta and N = sqrt(2 beta / B(alpha', beta')),
// evaluated with mpmath.
TEST(Assemble, PublishedEnergyExponentsAndNorm) {
  const auto w = wavefn::assemble_at_energy(table1_params(1), -15.977, 0);
  EXPECT_NEAR(w.alpha_prime, 177.62132605911938, 1e-10);
  EXPECT_NEAR(w.beta_prime, 47.378639395829003, 1e-10);
  EXPECT_NEAR(w.beta_prime_direct, 47.378639395829003, 1e-12);
  EXPECT_NEAR(w.norm_numeric / 3.1025019475363126e25, 1.0, 1e-10);
  ASSERT_TRUE(w.norm_analytic.has_value());
  EXPECT_NEAR(*w.norm_analytic / w.norm_numeric, 1.0, 1e-10);
}

TEST(Assemble, NormalizedToOne) {
  for (int c : {1, 2}) {
    for (unsigned n = 0; n < 5; ++n) {
      const auto w = wavefn::assemble_at_energy(table1_params(c), -20.0 - 2.0 * n, n);
      EXPECT_NEAR(wavefn::norm_integral(w, w.norm_numeric), 1.0, 1e-10) << c << " " << n;
      ASSERT_TRUE(w.norm_analytic.has_value());
      EXPECT_NEAR(*w.norm_analytic / w.norm_numeric, 1.0, 1e-8) << c << " " << n;
    }
  }
}

TEST(Assemble, SolvedLevelsSatisfyTheEquation) {
  const auto rep = spectrum::solve_constant_mass(spin_params(), spectrum::Symmetry::spin, 3);
  ASSERT_EQ(rep.levels.size(), 4u);
  for (const auto& l : rep.levels) {
    const auto w = wavefn::assemble(spin_params(), l);
    EXPECT_LE(wavefn::ode_residual(w, spin_params()), 1e-8) << l.n;
    const auto off = wavefn::assemble_at_energy(spin_params(), l.E.real() - 0.05, l.n);
    EXPECT_GE(wavefn::ode_residual(off, spin_params()), 1e-2) << l.n;
  }
}

TEST(Assemble, NodesFollowN) {
  const auto rep = spectrum::solve_constant_mass(spin_params(), spectrum::Symmetry::spin, 3);
  for (const auto& l : rep.levels) {
    const auto w = wavefn::assemble(spin_params(), l);
    EXPECT_EQ(wavefn::count_sign_changes(wavefn::sample(w, spin_params(), 801)), l.n);
  }
  // Table parameters, component 2, lower branch.
  const auto t = spectrum::solve_levels(table1_params(2), 2);
  const auto w0 = wavefn::assemble(table1_params(2), t.levels_for(0).front());
  EXPECT_EQ(wavefn::count_sign_changes(wavefn::sample(w0, table1_params(2), 801)), 0u);
  const auto w2 = wavefn::assemble(table1_params(2), t.levels_for(2).front());
  EXPECT_EQ(wavefn::count_sign_changes(wavefn::sample(w2, table1_params(2), 801)), 2u);
}

TEST(Assemble, RejectsBadLevels) {
  EnergyLevel l;
  l.n = 0;
  l.E = 4.0;
  l.residual = 1.0;
  EXPECT_CODE(wavefn::assemble(spin_params(), l), errc::invalid_level);
  l.residual = 0.0;
  l.branch = LevelBranch::nonrel;
  EXPECT_CODE(wavefn::assemble(spin_params(), l), errc::invalid_level);
}

TEST(Normalization, NeedsPositiveExponents) {
  WaveSpec w;
  w.alpha_prime = -0.5;
  w.beta_prime = 2.0;
  EXPECT_CODE(wavefn::normalization_numeric(w), errc::condition_violated);
  EXPECT_CODE(wavefn::normalization_analytic(w), errc::condition_violated);
}

TEST(Normalization, GroundStateIsEulerBeta) {
  WaveSpec w;
  w.alpha_prime = 3.5;
  w.beta_prime = 2.25;
  w.beta = 0.8;
  const double expected = std::sqrt(2.0 * 0.8 / std::exp(specfun::log_beta(3.5, 2.25)));
  EXPECT_NEAR(wavefn::normalization_numeric(w), expected, 1e-12 * expected);
  EXPECT_NEAR(wavefn::normalization_analytic(w), expected, 1e-12 * expected);
}

TEST(Pt, NegatedComplexExponents) {
  const ModelParams p{0.25, -1.0, 5.0, 0.3, 0.5, -5.0, -5.0, 1};
  const auto rep = spectrum::solve_pt(p, 0, spectrum::PtVariant::imag_beta);
  ASSERT_FALSE(rep.levels.empty());
  const auto w = wavefn::assemble(p, rep.levels.front());
  EXPECT_TRUE(w.pt_flag);
  EXPECT_LE(w.beta_pt.real(), 0.0);
  const cplx v = wavefn::evaluate(w, 0.5);
  EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
}

TEST(Exponential, LaguerreSolution) {
  ModelParams p{0.5, 0.0, 2.0, 0.4, -0.4, 1.2, 0.0, 1};
  const auto w = wavefn::exponential_wave(p, 1.1, 1);
  EXPECT_EQ(w.descriptor.family, nu::Family::laguerre);
  const auto samples = wavefn::sample(w, p, 201);
  EXPECT_EQ(samples.size(), 201u);
  EXPECT_CODE(wavefn::exponential_wave(table1_params(1), 1.0, 0), errc::wrong_family);
}

TEST(Csv, Columns) {
  const auto w = wavefn::assemble_at_energy(spin_params(), 4.4117647058823533, 0);
  std::ostringstream os;
  wavefn::write_csv(os, wavefn::sample(w, spin_params(), 11));
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("s,x,re_phi,im_phi\n", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 12);
}
