// Acceptance gate: runs the ten verification suites at their pinned
// tolerances with a fixed seed and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "higgsline/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  higgsline::VerifyOptions opt;
  opt.seed = 424242;

  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"quaternion", "quaternion algebra, charts, antipodal law"},
      {"periods", "Riemann bilinear relations and basis change"},
      {"lattice", "reduction, two-torsion, membership"},
      {"conversion", "coordinate dictionaries and group law"},
      {"jpi", "multiplication by i in period coordinates"},
      {"forms", "complex-symplectic forms and equivariance"},
      {"potentials", "Kahler potentials by finite differences"},
      {"quaternionization", "rank of the quaternionization map"},
      {"twistor", "charts, lines, involution, gluing"},
      {"conformance", "display discrepancies quantified"},
  };

  bool all_pass = true;
  int n = 0;
  for (const auto& [suite, label] : criteria) {
    higgsline::VerificationReport report = higgsline::run_suite(suite, opt);
    double worst = 0;
    std::string failed;
    for (const higgsline::CheckResult& c : report.checks) {
      if (!c.negative_control) worst = std::max(worst, c.max_residual);
      if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    bool pass = report.pass();
    all_pass = all_pass && pass;
    std::printf("criterion %2d  %-18s %s  (%zu checks, worst residual %.3e) %s\n", ++n,
                suite.c_str(), pass ? "PASS" : "FAIL", report.checks.size(), worst,
                label.c_str());
    if (!failed.empty()) std::printf("              failing checks: %s\n", failed.c_str());
    if (suite == "conformance") {
      for (const auto& [name, value] : report.constants)
        std::printf("              measured %s = %.12g\n", name.c_str(), value);
      for (const std::string& note : report.notes)
        std::printf("              note: %s\n", note.c_str());
    }
  }

  const double secs =
      std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - t0).count();
  std::printf("acceptance: %s in %.1f s\n", all_pass ? "PASS" : "FAIL", secs);
  return all_pass ? 0 : 1;
}
