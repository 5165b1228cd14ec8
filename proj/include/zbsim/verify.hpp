#pragma once

// Self-verification suites run by `zbsim verify`.  Each suite evaluates the
// invariants of one module on seeded random inputs and reports the largest
// residual per check against its threshold.

#include "zbsim/config.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zbsim {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  bool boolean = false;  // pass/fail only; residual and threshold unused
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: all
  double perturb = 0.0;             // spinor noise amplitude for fault injection
  std::optional<double> tol;        // overrides the exact-identity threshold
  bool include_large = true;        // two-pair Fock space (65536 states)
  std::uint64_t seed = 20070625;
};

/// spinor, polarization, pair_coeffs, fock, dirac1d, ion_map
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

void print_report(std::ostream& os, const std::vector<SuiteResult>& results);

}  // namespace zbsim
