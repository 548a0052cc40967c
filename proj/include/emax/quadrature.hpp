#ifndef EMAX_QUADRATURE_HPP
#define EMAX_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace emax {

inline constexpr double kQuadratureRelTolerance = 1e-13;

/// Adaptive 31-point Gauss-Kronrod on [a, b]. Integrands here are smooth on
/// the closed interval, so no endpoint treatment is applied.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = kQuadratureRelTolerance) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, rel_tol, &error);
}

}  // namespace emax

#endif  // EMAX_QUADRATURE_HPP
