#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "higgsline/period_matrix.hpp"

namespace higgsline {

// One property check: `pass` means max_residual <= tolerance, except for
// negative controls, which pass when the residual exceeds the tolerance.
struct CheckResult {
  std::string name;
  long samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool negative_control = false;
};

// Result of one suite run. Checks are sorted by name; constants are measured
// normalization constants (proportionality factors, signs); notes record
// conventions findings in plain language.
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;  // requested override; 0 means per-check defaults
  std::vector<CheckResult> checks;
  std::map<std::string, double> constants;
  std::vector<std::string> notes;

  bool pass() const;
};

nlohmann::json to_json(const VerificationReport& r);

struct VerifyOptions {
  std::uint64_t seed = 0;
  // 0 keeps each check's documented default count; otherwise replaces the
  // count of every randomized check.
  int samples = 0;
  // When set, period-dependent suites run against this matrix instead of
  // drawing random ones (the periods suite additionally keeps its random
  // sweep over k = 1..4).
  std::optional<PeriodMatrix> pi;
  // > 0 replaces the default tolerance of every check.
  double tol = 0.0;
};

// Canonical suite order; run_suite accepts exactly these names.
const std::vector<std::string>& suite_names();

// Throws Error(InvalidArgument) for an unknown suite name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt);

std::vector<VerificationReport> run_all(const VerifyOptions& opt);

}  // namespace higgsline
