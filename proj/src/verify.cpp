#include "emax/verify.hpp"

#include "emax/functional.hpp"
#include "emax/moduli.hpp"
#include "emax/quadrature.hpp"
#include "emax/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace emax {

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); result_.passed = true; }

  void expect(bool ok, const std::string& what = {}) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what.empty() ? "case " + std::to_string(result_.cases) + " failed" : what;
    } else if (!ok) {
      result_.passed = false;
    }
  }

  void within(double error, double tol, const std::string& what = {}) {
    result_.worst = std::max(result_.worst, std::isfinite(error) ? error : INFINITY);
    expect(error <= tol, what);
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

class Source {
 public:
  explicit Source(unsigned seed) : rng_(seed) {}

  Rational fraction(long max_den) {
    long d = std::uniform_int_distribution<long>(2, max_den)(rng_);
    long n = std::uniform_int_distribution<long>(1, d - 1)(rng_);
    return Rational(n, d);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

std::string describe(const Rational& x, const RuledSurface& surface) {
  return "x=" + to_string(x) + " genus=" + std::to_string(surface.genus) + " n=" + std::to_string(surface.degree);
}

CheckResult sturm_counts() {
  Check check("sturm_root_count");
  Source src(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    int count = src.integer(1, 5);
    for (int i = 0; i < count; ++i) roots.push_back(Rational(src.integer(-20, 20), src.integer(1, 9)));
    RationalPolynomial p({Rational(src.integer(1, 4))});
    for (const auto& r : roots) p = p * RationalPolynomial({Rational(-r), Rational(1)});
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    check.expect(real_root_count(p) == roots.size(), "real_root_count disagrees with constructed roots");
    std::size_t inside = std::count_if(roots.begin(), roots.end(), [](const Rational& r) { return r > -1 && r < 1; });
    check.expect(sturm_root_count(p, Interval{Rational(-1), Rational(1), true, true}) == inside,
                 "open-interval count disagrees with constructed roots");
  }
  return check.done();
}

CheckResult boundary_and_residual(const VerifyOptions& opt) {
  Check check("boundary_conditions_and_constraint");
  Source src(2);
  for (int trial = 0; trial < 300; ++trial) {
    auto surface = make_surface(src.integer(0, 4), src.integer(1, 5));
    auto x = src.fraction(997);
    auto cand = solve_case1(x, surface, opt.solve);
    const Real xr = to_real(x);
    const auto dF = cand.F.derivative(1);
    double worst = std::max({to_double(abs(cand.F(Real(1)))), to_double(abs(cand.F(Real(-1)))),
                             to_double(abs(dF(Real(1)) + 2 * (1 + xr))), to_double(abs(dF(Real(-1)) - 2 * (1 - xr)))});
    double residual = to_double(abs(formulas::constraint_residual(xr, to_real(surface.s_sigma), cand.b)));
    check.within(std::max(worst, residual), opt.tol, describe(x, surface));
  }
  return check.done();
}

CheckResult scal_h_constancy(const VerifyOptions& opt) {
  Check check("scal_h_constancy");
  Source src(3);
  int solved = 0;
  while (solved < 40) {
    auto surface = make_surface(src.integer(0, 3), src.integer(1, 3));
    auto x = src.fraction(500);
    auto cand = solve_case1(x, surface, opt.solve);
    if (!cand.is_solution()) continue;
    ++solved;
    double worst = 0;
    for (int i = 0; i < opt.samples; ++i) {
      Real z = Real(-1) + Real(2) * i / (opt.samples - 1);
      if (abs(z) == 1) z *= Real(0.999);
      worst = std::max(worst, to_double(abs(scal_h_at(cand, surface, z) - cand.A) / abs(cand.A)));
    }
    check.within(worst, 1e-9, describe(x, surface));
  }
  return check.done();
}

CheckResult positivity_dichotomy(const VerifyOptions& opt) {
  Check check("positivity_dichotomy");
  for (auto surface : {make_surface(0, 1), make_surface(1, 1), make_surface(0, 5)})
    for (int i = 1; i < 200; ++i)
      check.expect(solve_case1(Rational(i, 200), surface, opt.solve).is_solution(),
                   describe(Rational(i, 200), surface));
  for (auto surface : {make_surface(2, 1), make_surface(4, 1), make_surface(2, 3)}) {
    const double x2 = thresholds(surface).x2;
    for (int i = 1; i < 200; ++i) {
      Rational x(i, 200);
      bool ok = solve_case1(x, surface, opt.solve).is_solution();
      check.expect(ok == (to_double(x) < x2), describe(x, surface));
    }
  }
  return check.done();
}

CheckResult discriminant_identity(const VerifyOptions& opt) {
  Check check("discriminant_identity");
  Source src(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto surface = make_surface(src.integer(0, 5), src.integer(1, 4));
    auto x = src.fraction(1000);
    auto cand = solve_case1(x, surface, opt.solve);
    const Real xr = to_real(x);
    const Real r = sqrt(1 - xr * xr);
    const Real den = 3 - 2 * xr * xr + 3 * r;
    Real disc = xr * xr - 4 * cand.c * (1 - cand.c);
    Real closed = xr * xr * formulas::discriminant_factor(xr, to_real(surface.s_sigma)) / (4 * den * den);
    check.within(to_double(abs(disc - closed)), opt.tol, describe(x, surface));
  }
  return check.done();
}

CheckResult threshold_lower_bound() {
  Check check("threshold_lower_bound");
  for (Rational s : {Rational(-2), Rational(-1), Rational(-2, 3), Rational(-4), Rational(-10)}) {
    auto t = thresholds(s);
    double sd = to_double(s);
    check.expect(t.x1 < t.x2 && t.x2 > 1 / (sd * sd + 2), "s=" + to_string(s));
  }
  return check.done();
}

CheckResult case_two_branches(const VerifyOptions& opt) {
  Check check("case2_branches");
  auto hirz = make_surface(0, 1);
  Real prev_plus = 2, prev_minus = 2;
  const double pi = boost::math::constants::pi<double>();
  for (int i = 1; i < 100; ++i) {
    Rational x = Rational(4, 5) + Rational(i, 500);
    auto pair = solve_case2(x, hirz, opt.solve);
    check.expect(pair.size() == 2 && pair[0].b > prev_plus && pair[1].b < prev_minus && pair[1].b > 1,
                 "monotonicity at x=" + to_string(x));
    check.expect(*pair[0].F_exact == *pair[1].F_exact && *pair[0].c_exact == (1 - x) / 2,
                 "shared profile at x=" + to_string(x));
    prev_plus = pair[0].b;
    prev_minus = pair[1].b;
    double xd = to_double(x);
    double want = 4 * pi * std::sqrt(6.0) * std::sqrt((4 * xd - 1) / xd);
    for (const auto& cand : pair) check.within(std::abs(eh_value(cand, hirz).eh - want) / want, 1e-12);
  }
  return check.done();
}

CheckResult futaki_consistency(const VerifyOptions& opt) {
  Check check("futaki_consistency");
  Source src(5);
  for (int trial = 0; trial < 200; ++trial) {
    Real x = src.real(0.01, 0.99);
    Real s = src.real(-6.0, 2.0);
    Real r = sqrt(1 - x * x);
    std::vector<Real> roots{(1 + r) / x, (1 - r) / x};
    Real a = s * x - 2;
    Real disc = 4 * x * x + 4 * a * s * x;
    if (disc >= 0) {
      roots.push_back((-2 * x + sqrt(disc)) / (2 * a));
      roots.push_back((-2 * x - sqrt(disc)) / (2 * a));
    }
    for (const auto& b : roots) {
      Real want = formulas::c_from_b(x, s, b);
      check.within(to_double(abs(futaki_c(x, s, b) - want) / (1 + abs(want))), opt.tol);
    }
  }
  return check.done();
}

CheckResult volume_oracle() {
  Check check("volume_quadrature");
  Source src(6);
  const double pi = boost::math::constants::pi<double>();
  for (int trial = 0; trial < 100; ++trial) {
    double x = src.real(0.01, 0.99);
    double b = src.real(1.05, 15.0);
    int n = src.integer(1, 6);
    double integral = integrate([&](double z) { return std::pow(z + b, -4.0) * (z + 1 / x); }, -1.0, 1.0);
    double quad = 4 * pi * pi * n * integral;
    check.within(std::abs(vol_h(x, b, n) - quad) / quad, 1e-10);
  }
  return check.done();
}

CheckResult torus_functional(const VerifyOptions& opt) {
  Check check("torus_eh_monotone_and_bounded");
  auto torus = make_surface(1, 1);
  double prev = INFINITY;
  for (int i = 1; i < 1000; ++i) {
    double v = eh_case1_closed(i / 1000.0, torus);
    check.expect(v < prev, "closed form not decreasing at x=" + std::to_string(i / 1000.0));
    prev = v;
  }
  for (int i = 1; i < 100; ++i) {
    auto rep = eh_value(solve_case1(Rational(i, 100), torus, opt.solve), torus);
    check.expect(rep.eh < rep.kahler_yamabe_bound, "bound domination at x=" + std::to_string(i / 100.0));
  }
  return check.done();
}

CheckResult total_scal_independence() {
  Check check("total_scal_independence");
  Source src(7);
  const double pi = boost::math::constants::pi<double>();
  RationalPolynomial q({Rational(1), Rational(0), Rational(-1)});
  for (int trial = 0; trial < 20; ++trial) {
    auto surface = make_surface(src.integer(0, 3), src.integer(1, 3));
    auto x = src.fraction(60);
    RationalPolynomial F = q * RationalPolynomial({Rational(1), x}) +
                           q * q * RationalPolynomial({Rational(src.integer(-5, 5), 4), Rational(src.integer(-3, 3), 5)});
    double xd = to_double(x), s = to_double(surface.s_sigma);
    double want = 4 * pi * (2 + 2 * s * xd) * std::sqrt(double(surface.degree)) / std::sqrt(2 * xd);
    check.within(std::abs(total_scal_normalized(F, x, surface) - want) / (1 + std::abs(want)), 1e-10,
                 describe(x, surface));
  }
  return check.done();
}

CheckResult moduli_scans(const VerifyOptions& opt) {
  Check check("moduli_scans");
  for (auto manifold : {Manifold::Product, Manifold::Twisted}) {
    for (int genus = 1; genus <= 3; ++genus) {
      for (int twice_p = 1; twice_p <= 16; ++twice_p) {
        Rational p(twice_p, 2);
        ModuliScan scan;
        try {
          scan = enumerate_components(manifold, genus, p, opt.solve);
        } catch (const Error& e) {
          check.expect(e.kind() == ErrorKind::EmptyScan, e.what());
          continue;
        }
        const ModuliEntry* prev = nullptr;
        for (const auto& e : scan.entries) {
          if (!e.admitted) continue;
          check.expect(!prev || e.eh < prev->eh, "eh not decreasing for p=" + to_string(p));
          prev = &e;
          if (manifold == Manifold::Product && e.degree > 0) {
            Rational g1(1 - genus);
            if (p > g1 * g1 / e.k + 2 * e.k) check.expect(e.admitted, "sufficient bound not honoured");
          }
        }
      }
      for (int N = 1; N <= 4; ++N) {
        auto p = witness_class(manifold, genus, N, opt.solve);
        check.expect(enumerate_components(manifold, genus, p, opt.solve).distinct_count >= N, "witness_class");
      }
    }
  }
  return check.done();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::pair<std::string, std::function<CheckResult()>>> suites = {
      {"sturm_root_count", [] { return sturm_counts(); }},
      {"boundary_conditions_and_constraint", [&] { return boundary_and_residual(options); }},
      {"scal_h_constancy", [&] { return scal_h_constancy(options); }},
      {"positivity_dichotomy", [&] { return positivity_dichotomy(options); }},
      {"discriminant_identity", [&] { return discriminant_identity(options); }},
      {"threshold_lower_bound", [] { return threshold_lower_bound(); }},
      {"case2_branches", [&] { return case_two_branches(options); }},
      {"futaki_consistency", [&] { return futaki_consistency(options); }},
      {"volume_quadrature", [] { return volume_oracle(); }},
      {"torus_eh_monotone_and_bounded", [&] { return torus_functional(options); }},
      {"total_scal_independence", [] { return total_scal_independence(); }},
      {"moduli_scans", [&] { return moduli_scans(options); }},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, suite] : suites) {
    try {
      out.push_back(suite());
    } catch (const std::exception& e) {
      out.push_back(CheckResult{name, false, 0, 0.0, std::string("unexpected exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace emax
