#include <cmath>

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "hulthen/spectrum.hpp"

using namespace hulthen;

namespace {

// Roots of the unsquared component-2 condition at the table parameters,
// located with mpmath at 40 digits.
const double kTableComponent2[5][2] = {{-10.487045796327938, 36.537546950025572},
                                       {-13.502256693876921, 38.700729986686328},
                                       {-16.205429413673758, 40.537564814275265},
                                       {-18.667499822949820, 42.118677225247564},
                                       {-20.934640462902155, 43.489921617989037}};

// Spin-symmetric Woods-Saxon: beta=0.3, q=-1, m0=5, V0=1, S0=-1, V1=-4.
const double kSpin[4] = {75.0 / 17.0, 4.5160906248978699, 4.5956116506676704, 4.6459004713307079};

ModelParams spin_params() { return ModelParams{0.3, -1.0, 5.0, 1.0, -1.0, -4.0, 0.0, 1}; }

}  // namespace

TEST(Residual, ZeroPotential) {
  const ModelParams p{1.0, -1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1};
  EXPECT_NEAR(spectrum::energy_residual(p, 0.3, 0), 7.4557568056677826, 1e-13);
}

TEST(Residual, OutsideDomain) {
  EXPECT_CODE(spectrum::energy_residual(table1_params(2), 60.0, 0), errc::out_of_domain);
}

TEST(Residual, GenericEqualsExplicit) {
  for (int c : {1, 2}) {
    const ModelParams p = table1_params(c);
    for (double E : {-30.0, -5.0, 20.0}) {
      for (unsigned n = 0; n < 4; ++n) {
        const double scale = spectrum::residual_scale(p, E, n);
        EXPECT_NEAR((spectrum::energy_residual(p, E, n) - spectrum::energy_residual_explicit(p, E, n)) / scale,
                    0.0, 1e-13);
      }
    }
  }
}

TEST(Residual, PublishedTableIsNotARoot) {
  // The published values leave a large residual under the stated condition.
  EXPECT_GT(std::abs(spectrum::energy_residual_unsquared(table1_params(2), -33.662, 3)), 10.0);
}

TEST(SolveLevels, TableComponentTwo) {
  const auto rep = spectrum::solve_levels(table1_params(2), 4);
  ASSERT_EQ(rep.levels.size(), 10u);
  for (unsigned n = 0; n < 5; ++n) {
    const auto lv = rep.levels_for(n);
    ASSERT_EQ(lv.size(), 2u) << n;
    EXPECT_NEAR(lv[0].E.real(), kTableComponent2[n][0], 1e-9) << n;
    EXPECT_NEAR(lv[1].E.real(), kTableComponent2[n][1], 1e-9) << n;
    for (const auto& l : lv) {
      EXPECT_LE(l.residual, 1e-10);
      EXPECT_LE(std::abs(spectrum::energy_residual_unsquared(table1_params(2), l.E.real(), n)), 1e-10);
      EXPECT_EQ(l.component, 2);
      EXPECT_EQ(l.branch, LevelBranch::generic);
    }
  }
}

TEST(SolveLevels, TableComponentOneHasNoRoot) {
  EXPECT_TRUE(spectrum::solve_levels(table1_params(1), 4).levels.empty());
}

TEST(SolveLevels, ZeroPotentialIsEmpty) {
  const ModelParams p{1.0, -1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1};
  EXPECT_TRUE(spectrum::solve_levels(p, 3).levels.empty());
}

TEST(SolveLevels, QZeroRejected) {
  ModelParams p = table1_params(1);
  p.q = 0.0;
  EXPECT_CODE(spectrum::solve_levels(p, 2), errc::wrong_family);
}

TEST(ConstantMass, SpinLevels) {
  const auto rep = spectrum::solve_constant_mass(spin_params(), spectrum::Symmetry::spin, 5);
  ASSERT_EQ(rep.levels.size(), 4u);
  for (unsigned n = 0; n < 4; ++n) {
    EXPECT_EQ(rep.levels[n].n, n);
    EXPECT_NEAR(rep.levels[n].E.real(), kSpin[n], 1e-10);
    EXPECT_EQ(rep.levels[n].branch, LevelBranch::spin);
  }
  // Same numbers from the generic solver, since m_1 = 0 makes the mass constant.
  const auto gen = spectrum::solve_levels(spin_params(), 5);
  for (unsigned n = 0; n < 4; ++n) EXPECT_NEAR(gen.levels_for(n).front().E.real(), kSpin[n], 1e-10);
}

TEST(ConstantMass, SymmetryGuards) {
  EXPECT_CODE(spectrum::solve_constant_mass(table1_params(1), spectrum::Symmetry::spin, 2),
              errc::symmetry_violation);
  EXPECT_CODE(spectrum::solve_constant_mass(spin_params(), spectrum::Symmetry::pseudospin, 2),
              errc::symmetry_violation);
}

TEST(ConstantMass, PseudospinConsistentEqualsGeneric) {
  const ModelParams p{0.3, -1.0, 5.0, -1.0, -1.0, 0.0, 4.0, 2};
  const auto ps = spectrum::solve_constant_mass(p, spectrum::Symmetry::pseudospin, 3);
  const auto gen = spectrum::solve_levels(p, 3);
  for (const auto& l : ps.levels) {
    EXPECT_LT(l.E.real(), 0.0);
    bool found = false;
    for (const auto& g : gen.levels_for(l.n)) found = found || std::abs(g.E.real() - l.E.real()) < 1e-9;
    EXPECT_TRUE(found) << l.n << " " << l.E.real();
  }
}

TEST(Nonrel, LimitMatchesShiftedDirac) {
  const ModelParams p{0.3, -1.0, 50.0, 0.05, 0.0, -3.0, 3.0, 1};
  const auto nr = spectrum::solve_nonrelativistic(p, 3);
  const auto rel = spectrum::solve_levels(p, 3);
  ASSERT_FALSE(nr.levels.empty());
  EXPECT_NEAR(nr.levels.front().E.real(), -0.027777777777777776, 1e-12);
  for (const auto& l : nr.levels) {
    const auto r = rel.levels_for(l.n);
    ASSERT_FALSE(r.empty());
    EXPECT_NEAR((r.front().E.real() - p.m0) / l.E.real(), 1.0, 1e-2);
    EXPECT_LE(std::abs(l.E.real()) / p.m0, 1e-3);
  }
}

TEST(Nonrel, OneBranchSurvives) {
  const ModelParams p{0.3, -1.0, 50.0, 0.05, 0.0, -3.0, 3.0, 1};
  const auto c = spectrum::nonrel_candidates(p, 0);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(c[0].accepted());
  EXPECT_FALSE(c[1].accepted());
}

TEST(Pt, ResidualStructureAtRealEnergy) {
  const ModelParams p{0.25, -1.0, 5.0, 0.3, 0.5, -5.0, -5.0, 1};
  // Gamma = (i beta + QV)^2 + K with K = 0 here, so sqrt(Gamma) = 5 + 0.25 i.
  const cplx r = spectrum::pt_residual(p, cplx(1.0, 0.0), 2, -1, spectrum::PtVariant::imag_beta);
  EXPECT_NEAR(r.imag(), 0.25 * 5.0 - 0.25, 1e-12);
}

TEST(Pt, ScanPointHasRealLevelAndPairs) {
  const ModelParams p{0.25, -1.0, 5.0, 0.3, 0.5, -5.0, -5.0, 1};
  const auto rep = spectrum::solve_pt(p, 0, spectrum::PtVariant::imag_beta);
  ASSERT_FALSE(rep.levels.empty());
  bool real = false;
  for (const auto& l : rep.levels) {
    EXPECT_LE(l.residual, 1e-10);
    real = real || l.real;
    if (!l.real) {
      EXPECT_TRUE(l.paired);
    }
  }
  EXPECT_TRUE(real);
  EXPECT_EQ(rep.diagnostics.at("unpaired_complex"), 0.0);
}

TEST(Pt, VariantNames) {
  EXPECT_EQ(spectrum::pt_variant_from_string("imag-beta"), spectrum::PtVariant::imag_beta);
  EXPECT_EQ(spectrum::pt_variant_from_string("all-imag"), spectrum::PtVariant::all_imag);
  EXPECT_CODE(spectrum::pt_variant_from_string("neither"), errc::invalid_parameter);
}

TEST(Report, JsonRoundTripIsExact) {
  auto rep = spectrum::solve_levels(table1_params(2), 2);
  rep.levels.front().lambda = -1;
  rep.levels.front().E = cplx(rep.levels.front().E.real(), 1.0 / 3.0);
  const std::string text = nlohmann::json(rep).dump();
  const auto back = nlohmann::json::parse(text).get<SpectrumReport>();
  ASSERT_EQ(back.levels.size(), rep.levels.size());
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    EXPECT_EQ(back.levels[i].E, rep.levels[i].E);
    EXPECT_EQ(back.levels[i].residual, rep.levels[i].residual);
    EXPECT_EQ(back.levels[i].n, rep.levels[i].n);
    EXPECT_EQ(back.levels[i].lambda, rep.levels[i].lambda);
    EXPECT_EQ(back.levels[i].branch, rep.levels[i].branch);
  }
  EXPECT_EQ(back.params, rep.params);
}

TEST(Report, CsvHasRealLevelsOnly) {
  auto rep = spectrum::solve_levels(table1_params(2), 0);
  rep.levels.front().real = false;
  std::ostringstream os;
  write_csv(os, rep);
  const std::string s = os.str();
  EXPECT_EQ(s.rfind("n,E,branch,residual\n", 0), 0u);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2);
}
