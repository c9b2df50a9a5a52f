#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hulthen/cli.hpp"

using hulthen::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(HULTHEN_DATA_DIR) + "/" + name; }

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Cli, SpectrumCsv) {
  const auto r = call({"spectrum", "--params", data("table1.json"), "--component", "2", "--nmax", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 11u);
  EXPECT_NE(r.out.find("-10.4870457963"), std::string::npos);
}

TEST(Cli, SpectrumJsonRoundTrip) {
  const auto r = call({"spectrum", "--params", data("table1.json"), "--component", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto rep = nlohmann::json::parse(r.out).get<hulthen::SpectrumReport>();
  const auto direct = hulthen::spectrum::solve_levels(hulthen::table1_params(2), 4);
  ASSERT_EQ(rep.levels.size(), direct.levels.size());
  for (std::size_t i = 0; i < rep.levels.size(); ++i) EXPECT_EQ(rep.levels[i].E, direct.levels[i].E);
}

TEST(Cli, FlagsOverrideFile) {
  const auto r = call({"spectrum", "--params", data("table1.json"), "--component", "2", "--nmax", "0", "--V0",
                       "1.0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("params").at("component"), 2);
}

TEST(Cli, EmptyResultExitsOne) {
  const auto r = call({"spectrum", "--params", data("zero_potential.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, MalformedJsonExitsTwo) {
  const std::string path = testing::TempDir() + "bad.json";
  std::ofstream(path) << "{ \"beta\": ";
  EXPECT_EQ(call({"spectrum", "--params", path}).code, 2);
  std::ofstream(path) << R"({"beta": 1, "extra": 3})";
  EXPECT_EQ(call({"spectrum", "--params", path}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"spectrum", "--component", "3"}).code, 2);
  EXPECT_EQ(call({"spectrum", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"spectrum", "--mode", "weird", "--params", data("table1.json")}).code, 2);
  EXPECT_EQ(call({"verify", "--suite", "nosuch"}).code, 2);
}

TEST(Cli, SpinMode) {
  const auto r = call({"spectrum", "--params", data("woods_saxon_spin.json"), "--mode", "spin"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("spin"), std::string::npos);
  EXPECT_NE(r.out.find("4.41176470588"), std::string::npos);
}

TEST(Cli, Table1ReportsAndUsesTolerance) {
  const auto r = call({"table1"});
  EXPECT_EQ(r.code, 1);  // the published table is not reproduced
  EXPECT_NE(r.out.find("-15.97700"), std::string::npos);
  EXPECT_NE(r.out.find("diag:"), std::string::npos);
  const auto j = call({"table1", "--json", "--tolerance", "100"});
  EXPECT_EQ(j.code, 1);  // component 1 has no roots at all
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed.at("rows").size(), 10u);
  EXPECT_EQ(parsed.at("tolerance"), 100.0);
  EXPECT_TRUE(parsed.at("rows").at(5).at("pass"));  // component 2, n=0: within 100
}

TEST(Cli, WavefunctionCsvAndSidecar) {
  const std::string path = testing::TempDir() + "wf.csv";
  const auto r = call({"wavefunction", "--params", data("woods_saxon_spin.json"), "--n", "2", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream side(path + ".json");
  ASSERT_TRUE(side.good());
  nlohmann::json j;
  side >> j;
  EXPECT_EQ(j.at("sign_changes"), 2);
  EXPECT_GT(j.at("alpha_prime").get<double>(), 0.0);
  EXPECT_LE(j.at("ode_residual").get<double>(), 1e-8);
}

TEST(Cli, WavefunctionNeedsEnergyAtQZero) {
  const auto r = call({"wavefunction", "--params", data("table1.json"), "--q", "0"});
  EXPECT_EQ(r.code, 2);
  const auto ok = call({"wavefunction", "--params", data("table1.json"), "--q", "0", "--energy", "10"});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST(Cli, PtBothLambdas) {
  const auto r = call({"pt", "--params", data("pt_scan.json"), "--nmax", "0", "--variant", "imag-beta", "--lambda",
                       "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n,re_E,im_E,branch,lambda,root_sign,real,paired,residual\n", 0), 0u);
  EXPECT_NE(r.out.find(",1,"), std::string::npos);
  EXPECT_NE(r.out.find(",-1,"), std::string::npos);
  EXPECT_EQ(call({"pt", "--params", data("pt_scan.json"), "--lambda", "2"}).code, 2);
  EXPECT_EQ(call({"pt", "--params", data("pt_scan.json"), "--variant", "real"}).code, 2);
}

TEST(Cli, VerifySuite) {
  const auto r = call({"verify", "--suite", "identities"});
  EXPECT_EQ(r.code, 0);
  const auto j = call({"verify", "--suite", "specfun", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  std::istringstream in(j.out);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(nlohmann::json::parse(first).at("suite"), "specfun");
}
