#ifndef EMAX_NUMERIC_HPP
#define EMAX_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace emax {

// Expression templates are off so that generic formula templates can be
// instantiated with exact scalars.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
/// 50 significant decimal digits; used wherever a value is irrational.
using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Closed rational interval [lo, hi] known to contain some real value.
struct RationalEnclosure {
  Rational lo;
  Rational hi;

  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  Rational width() const { return hi - lo; }
};

struct ParsedRational {
  Rational value;
  bool from_decimal = false;  // true when the text was "0.6"-style and got snapped
  std::string text;
};

/// Parses "3/5", "-2", "0.6", "1e-3". Decimal forms are converted exactly and
/// then snapped to the nearest rational with denominator <= max_denominator.
/// Throws emax::Error(InvalidArgument) on malformed text.
ParsedRational parse_rational(std::string_view text, long max_denominator = 1000000);

/// Closest rational to q with denominator <= max_denominator.
Rational limit_denominator(const Rational& q, const Integer& max_denominator);

std::string to_string(const Rational& q);

inline Real to_real(const Rational& q) { return Real(q); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Real& r) { return r.convert_to<double>(); }

/// Rigorous enclosure of sqrt(q), q >= 0, of width at most 2^-bits / den(q).
RationalEnclosure sqrt_enclosure(const Rational& q, unsigned bits);

/// sqrt(q) when q is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& q);

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

/// Shortest-form rounding to `digits` significant digits (for output).
double round_significant(double value, int digits);

}  // namespace emax

#endif  // EMAX_NUMERIC_HPP
