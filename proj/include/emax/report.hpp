#ifndef EMAX_REPORT_HPP
#define EMAX_REPORT_HPP

#include "emax/functional.hpp"
#include "emax/moduli.hpp"
#include "emax/numeric.hpp"
#include "emax/surface.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace emax {

using Json = nlohmann::ordered_json;

/// One command's output. Tabular commands put their table in results["rows"];
/// the CSV view is derived from the same JSON values so both encodings agree.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
};

/// Rounds every floating value to a fixed number of significant digits.
class Formatter {
 public:
  explicit Formatter(int precision = 15) : precision_(precision) {}

  Json number(double value) const;
  Json number(const Real& value) const { return number(to_double(value)); }
  /// Exact string such as "11/130" when known, otherwise a rounded number.
  Json exact_or_number(const std::optional<Rational>& exact, const Real& approx) const;
  static Json exact(const std::optional<Rational>& value);

 private:
  int precision_;
};

/// Columns x,b,c,A,verdict,eh,kahler_bound,aubin,exceeds_aubin,negative_eh.
/// The eh columns are null for candidates that are not solutions.
Json candidate_row(const EMCandidate& cand, const RuledSurface& surface, const Formatter& fmt);

/// candidate_row plus exact values, the profile and the certifier witness.
Json candidate_detail(const EMCandidate& cand, const RuledSurface& surface, const Formatter& fmt);

Json moduli_row(const ModuliEntry& entry, const Formatter& fmt);

std::string to_json(const Report& report);
std::string to_csv(const Report& report);

}  // namespace emax

#endif  // EMAX_REPORT_HPP
