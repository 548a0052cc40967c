#ifndef EMAX_VERIFY_HPP
#define EMAX_VERIFY_HPP

#include "emax/surface.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace emax {

struct VerifyOptions {
  int samples = 1001;  // z-grid size for pointwise checks
  double tol = 1e-12;  // absolute tolerance for algebraic identities
  SolveOptions solve;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  double worst = 0.0;  // largest observed error, when the check measures one
  std::string detail;
};

/// Runs the module-level invariant suites with fixed seeds.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace emax

#endif  // EMAX_VERIFY_HPP
