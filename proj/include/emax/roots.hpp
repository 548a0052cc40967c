#ifndef EMAX_ROOTS_HPP
#define EMAX_ROOTS_HPP

#include "emax/errors.hpp"

#include <cmath>
#include <functional>

namespace emax {

inline constexpr double kDefaultBracketTolerance = 1e-14;
inline constexpr int kMaxNewtonIterations = 50;

/// Bisection on a sign-changing bracket until its width is <= tol, then an
/// optional Newton polish (needs the derivative). The polished value is kept
/// only if it stays inside the final bracket; otherwise the bracket midpoint
/// is returned. Deterministic: no randomness, fixed iteration order.
template <class T, class F>
T find_root_bracketed(F&& f, T lo, T hi, T tol = T(kDefaultBracketTolerance),
                      const std::function<T(T)>& derivative = {}) {
  using std::abs;
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "bracket tolerance must be positive");
  if (hi < lo) std::swap(lo, hi);
  T f_lo = f(lo);
  T f_hi = f(hi);
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  if ((f_lo > 0) == (f_hi > 0)) throw Error(ErrorKind::NoSignChange, "f(lo) and f(hi) have the same sign");

  const bool rising = f_hi > 0;
  // Bisection also stops once the midpoint no longer moves (bracket at ulp scale).
  while (hi - lo > tol) {
    T mid = lo + (hi - lo) / 2;
    if (!(mid > lo && mid < hi)) break;
    T fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == rising) hi = mid;
    else lo = mid;
  }
  T mid = lo + (hi - lo) / 2;
  if (!derivative) return mid;

  T x = mid;
  for (int i = 0; i < kMaxNewtonIterations; ++i) {
    T d = derivative(x);
    if (d == 0) return mid;
    T step = f(x) / d;
    x -= step;
    if (x < lo || x > hi) return mid;
    if (abs(step) <= abs(x) * T(1e-16)) break;
  }
  return abs(f(x)) <= abs(f(mid)) ? x : mid;
}

}  // namespace emax

#endif  // EMAX_ROOTS_HPP
