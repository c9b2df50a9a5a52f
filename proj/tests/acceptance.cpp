// Acceptance runner: one verdict line per criterion. With no arguments every
// criterion runs; otherwise pass c1..c9. Exit status is 0 only if all
// requested criteria pass.

#include <cstring>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hulthen/verify.hpp"

namespace {

struct Criterion {
  const char* id;
  const char* title;
  const char* suite;
};

const Criterion kCriteria[] = {
    {"c1", "published table reproduced within 1e-2, under 1 s", "table1"},
    {"c2", "A+2B+C = m0^2-E^2 over 1000 draws", "identities"},
    {"c3", "generic and explicit conditions agree over 500 draws", "dual_path"},
    {"c4", "solved levels satisfy the ODE, displaced energies do not", "ode"},
    {"c5", "closed-form spin levels match the finite-difference oracle", "oracle"},
    {"c6", "normalization: unit integral and closed form vs quadrature", "normalization"},
    {"c7", "PT scan: real level, small residuals, conjugate pairs", "pt"},
    {"c8", "non-relativistic limit within 1% of shifted Dirac levels", "nonrel"},
    {"c9", "special functions: endpoint, series, 3F2", "specfun"},
};

int run_one(const Criterion& c) {
  const auto r = hulthen::verify::run_suite(c.suite);
  const bool pass = r.passed();
  std::cout << "criterion " << c.id << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL") << " ("
            << (r.counted() - r.failures()) << "/" << r.counted() << " checks, " << r.seconds << " s)\n";
  if (!pass) {
    // The failing rows and the suite diagnostics explain the verdict.
    hulthen::verify::SuiteResult shown = r;
    shown.reports.clear();
    for (const auto& x : r.reports)
      if (!x.informational && !x.pass) shown.reports.push_back(x);
    hulthen::verify::write_table(std::cout, shown);
  } else {
    for (const auto& d : r.diagnostics) std::cout << "  diag: " << d << '\n';
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<const Criterion*> chosen;
  if (argc == 1) {
    for (const auto& c : kCriteria) chosen.push_back(&c);
  } else {
    for (int i = 1; i < argc; ++i) {
      const Criterion* found = nullptr;
      for (const auto& c : kCriteria)
        if (std::strcmp(c.id, argv[i]) == 0) found = &c;
      if (!found) {
        std::cerr << "unknown criterion " << argv[i] << '\n';
        return 2;
      }
      chosen.push_back(found);
    }
  }
  int failures = 0;
  for (const auto* c : chosen) failures += run_one(*c);
  return failures == 0 ? 0 : 1;
}
