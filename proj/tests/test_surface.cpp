#include "doctest.h"

#include "emax/surface.hpp"
#include "oracles.hpp"

#include <cmath>

using emax::EMCandidate;
using emax::Positivity;
using emax::Rational;
using emax::RationalPolynomial;
using emax::Real;
using emax::SolutionCase;

namespace {

double d(const Real& r) { return r.convert_to<double>(); }

const RationalPolynomial one_minus_z2({Rational(1), Rational(0), Rational(-1)});

template <class Fn>
emax::ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const emax::Error& e) {
    return e.kind();
  }
  FAIL("expected emax::Error");
  return emax::ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("make_surface") {
  CHECK(emax::make_surface(0, 1).s_sigma == 2);
  CHECK(emax::make_surface(1, 3).s_sigma == 0);
  CHECK(emax::make_surface(2, 1).s_sigma == -2);
  CHECK(emax::make_surface(0, 4).s_sigma == Rational(1, 2));
  CHECK(emax::make_surface(5, 3).s_sigma == Rational(-8, 3));
  CHECK(error_kind([] { emax::make_surface(1, 0); }) == emax::ErrorKind::InvalidDegree);
  for (int g = 0; g < 6; ++g)
    for (int n = 1; n < 6; ++n) CHECK(emax::make_surface(g, n).s_sigma <= 2);
}

TEST_CASE("class conversion between (x, n) and (parity, k, p)") {
  CHECK(emax::class_from_p(emax::Parity::Even, 2, Rational(5)).x == Rational(2, 5));
  CHECK(emax::class_from_p(emax::Parity::Odd, 0, Rational(2)).x == Rational(1, 5));

  auto cls = emax::class_from_x(Rational(3, 5), 4);
  CHECK(cls.parity == emax::Parity::Even);
  CHECK(cls.k == 2);
  CHECK(cls.p == Rational(10, 3));
  CHECK(emax::class_from_p(cls.parity, cls.k, cls.p).x == Rational(3, 5));
  CHECK(cls.fiber_pi_coefficient() == Rational(2) * Rational(2, 5) * 4 / Rational(3, 5));

  oracle::RationalSource src(5);
  for (int trial = 0; trial < 100; ++trial) {
    Rational x = src.inside(Rational(0), Rational(1), 97);
    int n = src.integer(1, 9);
    auto c = emax::class_from_x(x, n);
    CHECK(c.degree() == n);
    CHECK(Rational(c.k) < c.p);
    CHECK(emax::class_from_p(c.parity, c.k, c.p).x == x);
  }

  CHECK(error_kind([] { emax::class_from_p(emax::Parity::Even, 0, Rational(3)); }) == emax::ErrorKind::OutOfCone);
  CHECK(error_kind([] { emax::class_from_p(emax::Parity::Odd, 2, Rational(2)); }) == emax::ErrorKind::OutOfCone);
  CHECK(error_kind([] { emax::class_from_x(Rational(1), 2); }) == emax::ErrorKind::OutOfCone);
}

TEST_CASE("solve_case1 at x = 3/5 on the torus is exact") {
  auto cand = emax::solve_case1(Rational(3, 5), emax::make_surface(1, 1));
  // sqrt(1 - 9/25) = 4/5, b = (1 + 4/5)/(3/5) = 3; c and A by direct substitution.
  const Rational x(3, 5), b(3);
  const Rational c_oracle = (-1 + 3 * b * x) / (2 * (3 * b * b - 1));
  const Rational A_oracle = 6 * (1 - 6 * b * b + b * b * b * b + 2 * b * x + 2 * b * b * b * x) / (3 * b * b - 1);
  CHECK(c_oracle == Rational(11, 130));
  CHECK(A_oracle == Rational(192, 13));
  REQUIRE(cand.b_exact.has_value());
  CHECK(*cand.b_exact == 3);
  CHECK(*cand.c_exact == c_oracle);
  CHECK(*cand.A_exact == A_oracle);
  CHECK(cand.verdict.status == Positivity::StrictlyPositive);
  CHECK(cand.solution_case == SolutionCase::CaseOne);
}

TEST_CASE("solve_case1 other examples") {
  auto hirz = emax::solve_case1(Rational(4, 5), emax::make_surface(0, 1));
  CHECK(*hirz.b_exact == 2);
  CHECK(hirz.is_solution());

  auto bad = emax::solve_case1(Rational(99, 100), emax::make_surface(2, 1));
  CHECK(bad.verdict.status == Positivity::ChangesSign);
  REQUIRE(bad.verdict.witness.has_value());
  double w = static_cast<double>(*bad.verdict.witness);
  CHECK(std::abs(w) < 1);
  // The witness is a genuine negative value of m(z) at full precision.
  Real mw = emax::formulas::profile_factor(emax::to_real(bad.x), bad.c)(emax::to_real(*bad.verdict.witness));
  CHECK(mw < 0);

  // Irrational sqrt(1 - x^2): enclosure is tight and contains the 50-digit c.
  auto irr = emax::solve_case1(Rational(1, 2), emax::make_surface(2, 1));
  CHECK_FALSE(irr.c_exact.has_value());
  CHECK(irr.c_enclosure.lo < irr.c_enclosure.hi);
  CHECK(emax::to_real(irr.c_enclosure.lo) <= irr.c);
  CHECK(irr.c <= emax::to_real(irr.c_enclosure.hi));
  CHECK(irr.b > 1);
  CHECK(irr.is_solution());

  CHECK(error_kind([] { emax::solve_case1(Rational(0), emax::make_surface(1, 1)); }) == emax::ErrorKind::OutOfCone);
}

TEST_CASE("solve_case2 at x = 5/6") {
  auto hirz = emax::make_surface(0, 1);
  auto pair = emax::solve_case2(Rational(5, 6), hirz);
  REQUIRE(pair.size() == 2);
  const double s5 = std::sqrt(5.0);
  CHECK(d(pair[0].b) == doctest::Approx((5 + s5) / 2).epsilon(1e-15));
  CHECK(d(pair[1].b) == doctest::Approx((5 - s5) / 2).epsilon(1e-15));
  CHECK(pair[0].solution_case == SolutionCase::CaseTwoPlus);
  CHECK(pair[1].solution_case == SolutionCase::CaseTwoMinus);
  const Real x = Real(5) / 6;
  for (const auto& cand : pair) {
    CHECK(*cand.c_exact == Rational(1, 12));
    CHECK(abs((x - 1) * cand.b * cand.b + x * cand.b - x) < Real(1e-14));
    CHECK(cand.is_solution());
    CHECK(cand.b > 1);
    // c from the general b-formula collapses to (1 - x)/2.
    CHECK(abs(emax::formulas::c_from_b(x, Real(2), cand.b) - Real(1) / 12) < Real(1e-40));
  }
}

TEST_CASE("solve_case2 near and at the bifurcation") {
  auto hirz = emax::make_surface(0, 1);
  auto near = emax::solve_case2(Rational(4, 5) + Rational(1, 1000000000), hirz);
  REQUIRE(near.size() == 2);
  CHECK(std::abs(d(near[0].b) - 2) < 1e-3);
  CHECK(std::abs(d(near[1].b) - 2) < 1e-3);
  CHECK(near[0].b > near[1].b);

  auto at = emax::solve_case2(Rational(4, 5), hirz);
  REQUIRE(at.size() == 1);
  CHECK(at[0].solution_case == SolutionCase::CaseOne);
  CHECK(*at[0].b_exact == 2);

  auto same = emax::solve_case2(Rational(9, 10), hirz);
  CHECK(*same[0].F_exact == *same[1].F_exact);
  CHECK(same[0].F_exact->coefficients() == same[1].F_exact->coefficients());

  CHECK(error_kind([&] { emax::solve_case2(Rational(7, 10), hirz); }) == emax::ErrorKind::CaseTwoOutOfRange);
  CHECK(error_kind([&] { emax::solve_case2(Rational(1), hirz); }) == emax::ErrorKind::CaseTwoOutOfRange);
  CHECK(error_kind([] { emax::solve_case2(Rational(9, 10), emax::make_surface(1, 1)); }) ==
        emax::ErrorKind::WrongSurface);
}

TEST_CASE("scal_h_at is constant on solutions and not on other profiles") {
  const auto torus = emax::make_surface(1, 1);
  auto cand = emax::solve_case1(Rational(3, 5), torus);
  const Rational x(3, 5), s(0);
  CHECK(emax::scal_h_at(*cand.F_exact, x, s, *cand.b_exact, Rational(0)) == Rational(192, 13));
  CHECK(emax::scal_h_at(*cand.F_exact, x, s, *cand.b_exact, Rational(1, 3)) == Rational(192, 13));
  for (double z : {-0.9, 0.9}) {
    double v = d(emax::scal_h_at(cand, torus, Real(z)));
    CHECK(oracle::relative_error(v, 192.0 / 13.0) < 1e-12);
  }

  RationalPolynomial plain = one_minus_z2 * RationalPolynomial({Rational(1), x});
  Rational at0 = emax::scal_h_at(plain, x, s, Rational(3), Rational(0));
  Rational at_half = emax::scal_h_at(plain, x, s, Rational(3), Rational(1, 2));
  CHECK(at0 != at_half);
}

TEST_CASE("scal_g_at") {
  const Rational x(1, 2), s(0);
  RationalPolynomial F = one_minus_z2 * RationalPolynomial({Rational(1), x});
  // F'' = -2 - 6 x z, so Scal(g)(0) = 2.
  CHECK(emax::scal_g_at(F, x, s, Rational(0)) == 2);
  CHECK(emax::scal_g_at(F, x, Rational(-2), Rational(0)) == 2 * Rational(-2) * x + 2);

  auto cand = emax::solve_case1(Rational(3, 5), emax::make_surface(1, 1));
  CHECK(emax::scal_g_at(*cand.F_exact, Rational(3, 5), s, Rational(0)) !=
        emax::scal_g_at(*cand.F_exact, Rational(3, 5), s, Rational(1, 2)));
}

TEST_CASE("laplacian_at") {
  const Rational x(2, 7);
  RationalPolynomial F = one_minus_z2 * RationalPolynomial({Rational(1), x});
  RationalPolynomial constant({Rational(5)});
  RationalPolynomial z({Rational(0), Rational(1)});
  CHECK(emax::laplacian_at(constant, F, x, Rational(1, 3)) == 0);
  // -[F * 1]' / 1 at z = 0 is -F'(0) = -x.
  CHECK(emax::laplacian_at(z, F, x, Rational(0)) == -x);

  RationalPolynomial p({Rational(1), Rational(-2), Rational(3, 4)});
  RationalPolynomial q({Rational(0), Rational(5), Rational(0), Rational(-1)});
  oracle::RationalSource src(3);
  for (int i = 0; i < 10; ++i) {
    Rational zz = src.inside(Rational(-1), Rational(1), 101);
    CHECK(emax::laplacian_at(p + q, F, x, zz) ==
          emax::laplacian_at(p, F, x, zz) + emax::laplacian_at(q, F, x, zz));
  }
}

TEST_CASE("thresholds for genus 2, degree 1") {
  auto t = emax::thresholds(emax::make_surface(2, 1));
  CHECK(std::abs(t.x1 - 0.93578) < 5e-5);
  CHECK(std::abs(t.x2 - 0.97367) < 5e-5);
  auto same = emax::thresholds(emax::make_surface(3, 2));
  CHECK(same.x1 == t.x1);
  CHECK(same.x2 == t.x2);

  for (double s : {-2.0, -1.0, -0.5, -7.0}) {
    CHECK(emax::formulas::slope_factor(0.0, s) == doctest::Approx(12));
    CHECK(emax::formulas::slope_factor(1.0, s) == doctest::Approx(s));
  }
  CHECK(error_kind([] { emax::thresholds(emax::make_surface(1, 1)); }) == emax::ErrorKind::NotNegativeCurvature);
}

TEST_CASE("x2 exceeds 1/(s^2 + 2)") {
  for (Rational s : {Rational(-2), Rational(-1), Rational(-2, 3), Rational(-4), Rational(-10)}) {
    auto t = emax::thresholds(s);
    double sd = s.convert_to<double>();
    CAPTURE(sd);
    CHECK(t.x2 > 1.0 / (sd * sd + 2.0));
    CHECK(t.x1 < t.x2);
  }
}

TEST_CASE("boundary conditions and constraint residual of solved candidates") {
  oracle::RationalSource src(99);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational x = src.inside(Rational(0), Rational(1), 997);
    int genus = src.integer(0, 4);
    int n = src.integer(1, 5);
    auto surface = emax::make_surface(genus, n);
    auto cand = emax::solve_case1(x, surface);
    const Real xr = emax::to_real(x);
    Real residual = emax::formulas::constraint_residual(xr, emax::to_real(surface.s_sigma), cand.b);
    CAPTURE(trial);
    CHECK(abs(residual) <= Real(1e-12));
    CHECK(cand.b > 1);
    const auto dF = cand.F.derivative(1);
    CHECK(abs(cand.F(Real(1))) <= Real(1e-40));
    CHECK(abs(cand.F(Real(-1))) <= Real(1e-40));
    CHECK(abs(dF(Real(1)) + 2 * (1 + xr)) <= Real(1e-40));
    CHECK(abs(dF(Real(-1)) - 2 * (1 - xr)) <= Real(1e-40));
    if (cand.F_exact) {
      CHECK(cand.F_exact->operator()(Rational(1)) == 0);
      CHECK(cand.F_exact->derivative(1)(Rational(-1)) == 2 * (1 - x));
    }
  }
}

TEST_CASE("Scal(h) constancy over the z grid") {
  oracle::RationalSource src(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto surface = emax::make_surface(src.integer(0, 3), src.integer(1, 3));
    auto cand = emax::solve_case1(src.inside(Rational(0), Rational(1), 500), surface);
    if (!cand.is_solution()) continue;
    double worst = 0;
    for (int i = 0; i < 1001; ++i) {
      Real z = Real(-0.999) + Real(1.998) * i / 1000;
      worst = std::max(worst, d(abs(emax::scal_h_at(cand, surface, z) - cand.A) / abs(cand.A)));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("positivity dichotomy by sign of s") {
  // s >= 0: the whole cone.
  for (auto surface : {emax::make_surface(0, 1), emax::make_surface(0, 3), emax::make_surface(1, 2)}) {
    for (int i = 1; i < 100; ++i) CHECK(emax::solve_case1(Rational(i, 100), surface).is_solution());
  }
  // s < 0: exactly the grid points below x2.
  for (auto surface : {emax::make_surface(2, 1), emax::make_surface(3, 1), emax::make_surface(2, 3)}) {
    double x2 = emax::thresholds(surface).x2;
    for (int i = 1; i < 100; ++i) {
      bool ok = emax::solve_case1(Rational(i, 100), surface).is_solution();
      CHECK(ok == (i / 100.0 < x2));
    }
  }
}

TEST_CASE("discriminant of m matches x^2 D(x) / (4 (3 - 2x^2 + 3r)^2)") {
  oracle::RationalSource src(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto surface = emax::make_surface(src.integer(0, 5), src.integer(1, 4));
    auto cand = emax::solve_case1(src.inside(Rational(0), Rational(1), 1000), surface);
    const Real x = emax::to_real(cand.x);
    const Real s = emax::to_real(surface.s_sigma);
    const Real r = sqrt(1 - x * x);
    Real disc = x * x - 4 * cand.c * (1 - cand.c);
    Real den = 3 - 2 * x * x + 3 * r;
    Real closed = x * x * emax::formulas::discriminant_factor(x, s) / (4 * den * den);
    CHECK(abs(disc - closed) <= Real(1e-12));
  }
}

TEST_CASE("Case 2 branches are monotone with the expected end behaviour") {
  auto hirz = emax::make_surface(0, 1);
  Real prev_plus = 0, prev_minus = 100;
  for (int i = 1; i < 200; ++i) {
    Rational x = Rational(4, 5) + Rational(i, 1000);
    auto pair = emax::solve_case2(x, hirz);
    CHECK(pair[0].b > prev_plus);
    CHECK(pair[1].b < prev_minus);
    CHECK(pair[1].b > 1);
    prev_plus = pair[0].b;
    prev_minus = pair[1].b;
  }
  auto edge = emax::solve_case2(1 - Rational(1, 1000000), hirz);
  CHECK(edge[0].b > 1e5);
  CHECK(edge[1].b < Real(1.00001));
}

TEST_CASE("futaki_c examples") {
  const Rational x(3, 5), s(0);
  CHECK(emax::futaki_c(x, s, Rational(3)) == Rational(11, 130));

  Rational base = (-1 + 3 * 5 * x) / (2 * (3 * 25 - 1));
  Rational extended = emax::futaki_c(x, s, Rational(5));
  CHECK(extended != base);

  Real b1 = (5 + sqrt(Real(5))) / 2;
  Real c = emax::futaki_c(Real(5) / 6, Real(2), b1);
  CHECK(abs(c - Real(1) / 12) < Real(1e-40));
}

TEST_CASE("futaki_c matches c at every real constraint root") {
  oracle::RationalSource src(31);
  for (int trial = 0; trial < 200; ++trial) {
    Real x = Real(src.real(0.01, 0.99));
    Real s = Real(src.real(-6.0, 2.0));
    Real r = sqrt(1 - x * x);
    std::vector<Real> roots{(1 + r) / x, (1 - r) / x};
    // (s x - 2) b^2 + 2 x b - s x = 0
    Real a = s * x - 2;
    Real disc = 4 * x * x + 4 * a * s * x;
    if (disc >= 0) {
      roots.push_back((-2 * x + sqrt(disc)) / (2 * a));
      roots.push_back((-2 * x - sqrt(disc)) / (2 * a));
    }
    for (const auto& b : roots) {
      Real want = emax::formulas::c_from_b(x, s, b);
      CHECK(abs(emax::futaki_c(x, s, b) - want) <= Real(1e-12) * (1 + abs(want)));
    }
  }
}

TEST_CASE("lebrun_invariants") {
  auto one = emax::lebrun_invariants(Rational(1));
  CHECK(one.a_shift == Rational(1, 8));
  CHECK(one.E == Rational(-1, 4));
  CHECK(emax::lebrun_invariants(Rational(3)) == emax::lebrun_invariants(Rational(1, 3)));
  auto two = emax::lebrun_invariants(Rational(2));
  CHECK(two.a_shift == Rational(1, 9));
  CHECK(two.b_shift == Rational(10, 9));
  CHECK(two.E == Rational(-2, 9));

  oracle::RationalSource src(41);
  for (int i = 0; i < 50; ++i) {
    double zeta = src.real(0.01, 50.0);
    auto a = emax::lebrun_invariants(zeta);
    auto b = emax::lebrun_invariants(1.0 / zeta);
    CHECK(std::abs(a.a_shift - b.a_shift) <= 1e-14);
    CHECK(std::abs(a.E - b.E) <= 1e-14);
  }
  CHECK_THROWS_AS(emax::lebrun_invariants(0.0), emax::Error);
}
