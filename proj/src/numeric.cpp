#include "emax/numeric.hpp"

#include "emax/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace emax {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorKind::InvalidArgument, "cannot parse '" + std::string(text) + "' as a rational");
}

Integer pow10(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(s.substr(e + 1));
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0' || std::labs(exponent) > 4000) malformed(text);
    s = s.substr(0, e);
  }
  std::string_view whole = s;
  std::string_view frac;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) malformed(text);
  if (!whole.empty() && !all_digits(whole)) malformed(text);
  if (!frac.empty() && !all_digits(frac)) malformed(text);

  Integer digits(std::string(whole) + std::string(frac));
  long scale = static_cast<long>(frac.size()) - exponent;
  Rational value = scale >= 0 ? Rational(digits, pow10(scale)) : Rational(digits * pow10(-scale));
  return negative ? Rational(-value) : value;
}

}  // namespace

ParsedRational parse_rational(std::string_view text, long max_denominator) {
  ParsedRational out;
  out.text = std::string(text);
  if (text.empty()) malformed(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) malformed(text);
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + out.text + "'");
    Integer n{std::string(num_digits)};
    if (num.front() == '-') n = -n;
    out.value = Rational(n, d);
    return out;
  }

  std::string_view unsigned_part = text;
  if (unsigned_part.front() == '-' || unsigned_part.front() == '+') unsigned_part.remove_prefix(1);
  if (all_digits(unsigned_part)) {
    Integer n{std::string(unsigned_part)};
    out.value = text.front() == '-' ? Rational(-n) : Rational(n);
    return out;
  }

  Rational exact = parse_decimal(text);
  out.value = limit_denominator(exact, Integer(max_denominator));
  out.from_decimal = true;
  return out;
}

Rational limit_denominator(const Rational& q, const Integer& max_denominator) {
  if (max_denominator < 1) throw Error(ErrorKind::InvalidArgument, "max_denominator must be >= 1");
  if (denominator(q) <= max_denominator) return q;
  if (q < 0) return -limit_denominator(-q, max_denominator);

  // Continued-fraction convergents, then the best semiconvergent.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = numerator(q), d = denominator(q);
  while (true) {
    Integer a = n / d;
    Integer q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Integer r = n - a * d;
    n = d;
    d = r;
  }
  Integer k = (max_denominator - q0) / q1;
  Rational bound1(p0 + k * p1, q0 + k * q1);
  Rational bound2(p1, q1);
  return abs(bound2 - q) <= abs(bound1 - q) ? bound2 : bound1;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return q.str();
}

RationalEnclosure sqrt_enclosure(const Rational& q, unsigned bits) {
  if (q < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of negative rational");
  Integer num = numerator(q);
  Integer den = denominator(q);
  // sqrt(num/den) = sqrt(num*den)/den; scale by 2^bits before the integer root.
  Integer scale = Integer(1) << bits;
  Integer radicand = num * den * scale * scale;
  Integer root = boost::multiprecision::sqrt(radicand);
  Rational lo(root, den * scale);
  if (root * root == radicand) return {lo, lo};
  return {lo, Rational(root + 1, den * scale)};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0 || digits >= 17) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

}  // namespace emax
