#ifndef EMAX_FUNCTIONAL_HPP
#define EMAX_FUNCTIONAL_HPP

#include "emax/errors.hpp"
#include "emax/numeric.hpp"
#include "emax/polynomial.hpp"
#include "emax/surface.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <variant>

namespace emax {

/// Scal(h), Vol(h), the Einstein-Hilbert value Scal(h) Vol(h)^{1/2} and the
/// two Yamabe upper bounds it is compared against.
struct EHReport {
  double scal_h = 0.0;
  double vol_h = 0.0;
  double eh = 0.0;
  double kahler_yamabe_bound = 0.0;
  double aubin_bound = 0.0;
  bool exceeds_aubin = false;   // eh > 8 pi sqrt(6): h is not a Yamabe minimizer
  bool improves_bound = false;  // eh < Kahler bound: sharper estimate of Y_[h]
  bool negative_eh = false;
};

struct YamabeBounds {
  double kahler_bound = 0.0;
  double aubin = 0.0;
};

struct ProductCSC {
  int genus = 1;
  Rational p;
};

struct TwistedStable {
  Rational p;
};

using ReferenceMetric = std::variant<ProductCSC, TwistedStable>;

template <class T>
T pi_value() {
  return boost::math::constants::pi<T>();
}

/// Vol(h) = (2 pi)^2 n 2 (3b^2 - 4bx + 1) / (3x (b^2 - 1)^3).
template <class T>
T vol_h(const T& x, const T& b, int n) {
  using std::abs;
  if (!(abs(b) > 1) || !(x > 0 && x < 1) || n < 1)
    throw Error(ErrorKind::InvalidArgument, "vol_h needs |b| > 1, 0 < x < 1, n >= 1");
  T pi = pi_value<T>();
  T q = b * b - 1;
  return 4 * pi * pi * n * 2 * (3 * b * b - 4 * b * x + 1) / (3 * x * q * q * q);
}

/// Vol(h) / pi^2, exact for rational x and b.
Rational vol_h_pi2_coefficient(const Rational& x, const Rational& b, int n);

/// The Einstein-Hilbert value written directly in (x, b, s, n).
template <class T>
T eh_formula(const T& x, const T& b, const T& s, int n) {
  using std::sqrt;
  T pi = pi_value<T>();
  T b2 = b * b;
  T b3 = b2 * b;
  T b4 = b2 * b2;
  T q = b2 - 1;
  T curvature = (1 - 6 * b2 + b4 + 2 * b * x + 2 * b3 * x - s * x + b4 * s * x) / (3 * b2 - 1);
  T volume_factor = sqrt(2 * (3 * b2 - 4 * b * x + 1) / (3 * x * q * q * q));
  return 12 * pi * sqrt(T(n)) * curvature * volume_factor;
}

/// Case 1 value as a function of x alone, for any genus:
///   4 sqrt(6 n) pi sqrt((1-x^2)/(x(1+2r))) + 8 pi sqrt(6/n) (1-g) sqrt(x/(1+2r)).
/// Purely formal: it does not check positivity of the profile.
template <class T>
T eh_case1_closed(const T& x, int genus, int n) {
  using std::sqrt;
  T pi = pi_value<T>();
  T r = sqrt(1 - x * x);
  T six = 6;
  T first = 4 * sqrt(six * n) * pi * sqrt((1 - x * x) / (x * (1 + 2 * r)));
  T second = 8 * pi * sqrt(six / n) * (1 - genus) * sqrt(x / (1 + 2 * r));
  return first + second;
}

double eh_case1_closed(double x, const RuledSurface& surface);

/// 4 pi (2 + 2 s x) sqrt(n) / sqrt(2x): c_1 . [w] normalized by the volume.
template <class T>
T kahler_yamabe_bound(const T& x, const T& s, int n) {
  using std::sqrt;
  return 4 * pi_value<T>() * (2 + 2 * s * x) * sqrt(T(n)) / sqrt(2 * x);
}

inline double aubin_bound() { return 8.0 * boost::math::constants::pi<double>() * std::sqrt(6.0); }

YamabeBounds yamabe_bounds(const Rational& x, const RuledSurface& surface);

/// Refuses candidates whose profile is not certified positive.
EHReport eh_value(const EMCandidate& cand, const RuledSurface& surface);

double reference_eh(const ReferenceMetric& metric);

/// Total scalar curvature of the admissible Kahler metric over the square
/// root of its volume, by quadrature in z. F must satisfy F(+-1) = 0 and
/// F'(+-1) = -+2(1 +- x); the result does not depend on F otherwise.
double total_scal_normalized(const RationalPolynomial& F, const Rational& x, const RuledSurface& surface);

}  // namespace emax

#endif  // EMAX_FUNCTIONAL_HPP
