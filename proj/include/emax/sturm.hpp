#ifndef EMAX_STURM_HPP
#define EMAX_STURM_HPP

#include "emax/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace emax {

/// Rational interval with independently open or closed ends; lo < hi.
struct Interval {
  Rational lo;
  Rational hi;
  bool open_lo = true;
  bool open_hi = true;

  static Interval open(Rational lo, Rational hi);
  static Interval closed(Rational lo, Rational hi);

  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& z) const;
};

enum class Positivity { StrictlyPositive, TouchesZero, ChangesSign };

std::string_view to_string(Positivity status);

struct PositivityVerdict {
  Positivity status = Positivity::StrictlyPositive;
  std::optional<Rational> witness;  // present iff status != StrictlyPositive

  bool strictly_positive() const { return status == Positivity::StrictlyPositive; }
};

/// Quotient and remainder of exact polynomial division; divisor must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& dividend,
                                                        const RationalPolynomial& divisor);

/// Canonical Sturm chain p, p', -rem(p, p'), ... with each member rescaled to
/// a monic polynomial (positive scaling keeps all sign patterns intact).
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots of p in iv, honouring open/closed ends.
std::size_t sturm_root_count(const RationalPolynomial& p, const Interval& iv);

/// Number of distinct real roots of p on the whole real line.
std::size_t real_root_count(const RationalPolynomial& p);

/// Disjoint closed rational intervals, sorted, each holding exactly one root
/// of p inside iv. A degenerate interval (lo == hi) is an exact rational root.
std::vector<RationalEnclosure> isolate_roots(const RationalPolynomial& p, const Interval& iv);

/// Sign certificate for p on iv, decided entirely in rational arithmetic.
PositivityVerdict certify_positive(const RationalPolynomial& p, const Interval& iv);

}  // namespace emax

#endif  // EMAX_STURM_HPP
