#ifndef EMAX_CLI_HPP
#define EMAX_CLI_HPP

#include "emax/numeric.hpp"
#include "emax/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace emax {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerify = 3;

struct RunConfig {
  std::string command;  // solve | case2 | thresholds | sweep | moduli | verify
  std::optional<int> genus;
  int degree = 1;
  std::optional<std::string> x;
  std::optional<std::string> p;
  std::string manifold = "product";
  int samples = 1001;
  double tol = 1e-12;
  std::string format = "json";
  int precision = 15;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::optional<std::string> out;
};

/// Thrown for malformed or inconsistent configuration; maps to exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Computes the report for a validated config. Domain failures propagate as
/// emax::Error, configuration problems as UsageError.
Report build_report(const RunConfig& config);

/// Runs one command, writes the serialized report to `out` (or the --out file)
/// and diagnostics to `err`. Returns the process exit status.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (including the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emax

#endif  // EMAX_CLI_HPP
