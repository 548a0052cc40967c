#include "emax/functional.hpp"

#include "emax/quadrature.hpp"

#include <stdexcept>

namespace emax {

Rational vol_h_pi2_coefficient(const Rational& x, const Rational& b, int n) {
  if (!(abs(b) > 1) || !(x > 0 && x < 1) || n < 1)
    throw Error(ErrorKind::InvalidArgument, "vol_h needs |b| > 1, 0 < x < 1, n >= 1");
  Rational q = b * b - 1;
  return Rational(4 * n) * 2 * (3 * b * b - 4 * b * x + 1) / (3 * x * q * q * q);
}

double eh_case1_closed(double x, const RuledSurface& surface) {
  return eh_case1_closed(x, surface.genus, surface.degree);
}

YamabeBounds yamabe_bounds(const Rational& x, const RuledSurface& surface) {
  if (!(x > 0 && x < 1)) throw Error(ErrorKind::OutOfCone, "x must lie in (0, 1)");
  return {kahler_yamabe_bound(to_double(x), to_double(surface.s_sigma), surface.degree), aubin_bound()};
}

EHReport eh_value(const EMCandidate& cand, const RuledSurface& surface) {
  if (!cand.is_solution())
    throw Error(ErrorKind::NotASolution, "profile is not positive on (-1, 1) (verdict " +
                                             std::string(to_string(cand.verdict.status)) + ")");
  const Real x = to_real(cand.x);
  const Real s = to_real(surface.s_sigma);
  const int n = surface.degree;

  const Real vol = vol_h(x, cand.b, n);
  const Real eh = eh_formula(x, cand.b, s, n);
  const Real from_volume = cand.A * sqrt(vol);
  if (abs(eh - from_volume) > Real(1e-12) * (abs(eh) + Real(1e-30)))
    throw std::logic_error("Einstein-Hilbert formula disagrees with Scal(h) Vol(h)^{1/2}");

  EHReport out;
  out.scal_h = to_double(cand.A);
  out.vol_h = to_double(vol);
  out.eh = to_double(eh);
  YamabeBounds bounds = yamabe_bounds(cand.x, surface);
  out.kahler_yamabe_bound = bounds.kahler_bound;
  out.aubin_bound = bounds.aubin;
  out.exceeds_aubin = out.eh > out.aubin_bound;
  out.improves_bound = out.eh < out.kahler_yamabe_bound;
  out.negative_eh = out.eh < 0;
  return out;
}

double reference_eh(const ReferenceMetric& metric) {
  const double pi = boost::math::constants::pi<double>();
  return std::visit(
      [pi](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ProductCSC>) {
          if (!(m.p > 0)) throw Error(ErrorKind::InvalidArgument, "product reference needs p > 0");
          double p = to_double(m.p);
          return 8 * pi * std::sqrt(p) * (1 + (1 - m.genus) / p);
        } else {
          if (!(m.p > Rational(-1, 2))) throw Error(ErrorKind::InvalidArgument, "stable reference needs p > -1/2");
          return 4 * pi * std::sqrt(2.0) * std::sqrt(2 * to_double(m.p) + 1);
        }
      },
      metric);
}

double total_scal_normalized(const RationalPolynomial& F, const Rational& x, const RuledSurface& surface) {
  if (!(x > 0 && x < 1)) throw Error(ErrorKind::OutOfCone, "x must lie in (0, 1)");
  const RationalPolynomial dF = F.derivative(1);
  const Rational one(1);
  if (F(one) != 0 || F(-one) != 0 || dF(one) != -2 * (1 + x) || dF(-one) != 2 * (1 - x))
    throw Error(ErrorKind::BoundaryViolation, "F must satisfy F(+-1) = 0 and F'(+-1) = -+2(1 +- x)");

  const Polynomial<double> Fd = F.cast<double>();
  const double xd = to_double(x);
  const double s = to_double(surface.s_sigma);
  const double pi = boost::math::constants::pi<double>();
  // d mu_g = 4 pi^2 n (z + 1/x) dz after integrating over the base and the circle.
  const double measure = 4 * pi * pi * surface.degree;
  auto density = [xd](double z) { return z + 1.0 / xd; };

  double total = measure * integrate([&](double z) { return scal_g_at(Fd, xd, s, z) * density(z); }, -1.0, 1.0);
  double volume = measure * integrate(density, -1.0, 1.0);
  return total / std::sqrt(volume);
}

}  // namespace emax
