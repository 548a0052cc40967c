#include "doctest.h"

#include "emax/moduli.hpp"
#include "oracles.hpp"

#include <cmath>

using emax::Manifold;
using emax::Rational;

namespace {

const double kPi = 3.14159265358979323846;

// Genus-1 closed forms written in (p, k).
double product_torus(double p, int k) {
  double root = std::sqrt(p * p - double(k) * k);
  return 8 * kPi * std::sqrt(3.0) * std::sqrt((p * p - double(k) * k) / (p + 2 * root));
}

double twisted_torus(double p, double odd) {
  double P = 2 * p + 1;
  double root = std::sqrt(P * P - odd * odd);
  return 4 * kPi * std::sqrt(6.0) * std::sqrt((P * P - odd * odd) / (P + 2 * root));
}

}  // namespace

TEST_CASE("product, genus 1, p = 5/2") {
  auto scan = emax::enumerate_components(Manifold::Product, 1, Rational(5, 2));
  REQUIRE(scan.entries.size() == 3);
  CHECK(scan.distinct_count == 3);
  CHECK(scan.entries[0].degree == 0);
  CHECK(scan.entries[0].eh == doctest::Approx(8 * kPi * std::sqrt(2.5)).epsilon(1e-14));
  for (int k = 1; k <= 2; ++k) {
    const auto& e = scan.entries[k];
    CHECK(e.k == k);
    CHECK(e.degree == 2 * k);
    CHECK(e.x == Rational(2 * k, 5));
    CHECK(e.admitted);
    CHECK(oracle::relative_error(e.eh, product_torus(2.5, k)) < 1e-12);
  }
  // The k = 0 product value is the k -> 0 limit of the closed form.
  CHECK(oracle::relative_error(product_torus(2.5, 0), scan.entries[0].eh) < 1e-14);
  CHECK(scan.entries[0].eh > scan.entries[1].eh);
  CHECK(scan.entries[1].eh > scan.entries[2].eh);
  CHECK(scan.warnings.empty());
}

TEST_CASE("twisted, genus 1, p = 5/2") {
  auto scan = emax::enumerate_components(Manifold::Twisted, 1, Rational(5, 2));
  REQUIRE(scan.entries.size() == 3);
  CHECK(scan.distinct_count == 3);
  for (int k = 0; k <= 2; ++k) {
    const auto& e = scan.entries[k];
    CHECK(e.degree == 2 * k + 1);
    CHECK(e.x == Rational(2 * k + 1, 6));
    CHECK(oracle::relative_error(e.eh, twisted_torus(2.5, 2 * k + 1)) < 1e-12);
  }
  CHECK(scan.entries[0].eh > scan.entries[1].eh);
  CHECK(scan.entries[1].eh > scan.entries[2].eh);
}

TEST_CASE("twisted formal limit reproduces the stable reference value") {
  for (Rational p : {Rational(1, 2), Rational(3), Rational(17, 4)}) {
    double pd = emax::to_double(p);
    CHECK(oracle::relative_error(twisted_torus(pd, 0.0), emax::reference_eh(emax::TwistedStable{p})) < 1e-10);
  }
}

TEST_CASE("product, genus 2, p = 10") {
  auto scan = emax::enumerate_components(Manifold::Product, 2, Rational(10));
  REQUIRE(scan.entries.size() == 10);
  const auto& k1 = scan.entries[1];
  CHECK(k1.p_bound);
  CHECK(k1.admitted);
  for (std::size_t i = 1; i < scan.entries.size(); ++i) {
    const auto& e = scan.entries[i];
    CHECK(e.x == Rational(e.k, 10));
    REQUIRE(e.solved.has_value());
    CHECK(e.admitted == e.solved->is_solution());
    // Admission agrees with the threshold for the entry's own s.
    double x2 = emax::thresholds(emax::make_surface(2, e.degree)).x2;
    CHECK(e.admitted == (emax::to_double(e.x) < x2));
  }
}

TEST_CASE("sufficient bound soundness for products of genus >= 2") {
  for (int genus = 2; genus <= 4; ++genus) {
    for (int twice_p = 2; twice_p <= 40; ++twice_p) {
      Rational p(twice_p, 2);
      auto scan = emax::enumerate_components(Manifold::Product, genus, p);
      for (const auto& e : scan.entries) {
        if (e.degree == 0) continue;
        Rational g1(1 - genus);
        if (p > g1 * g1 / e.k + 2 * e.k) {
          CHECK(e.positivity_bound);
          CHECK(e.admitted);
        }
      }
    }
  }
}

TEST_CASE("witness_class examples") {
  CHECK(emax::witness_class(Manifold::Product, 1, 4) == Rational(7, 2));
  CHECK(emax::witness_class(Manifold::Twisted, 1, 1) == Rational(1, 2));
  auto p = emax::witness_class(Manifold::Product, 3, 3);
  CHECK(emax::enumerate_components(Manifold::Product, 3, p).distinct_count >= 3);
  CHECK(emax::enumerate_components(Manifold::Product, 3, p - Rational(1, 2)).distinct_count < 3);
}

TEST_CASE("witness_class reaches N distinct values") {
  for (auto manifold : {Manifold::Product, Manifold::Twisted}) {
    for (int genus = 1; genus <= 3; ++genus) {
      for (int N = 1; N <= 8; ++N) {
        auto p = emax::witness_class(manifold, genus, N);
        CAPTURE(genus);
        CAPTURE(N);
        CHECK(emax::enumerate_components(manifold, genus, p).distinct_count >= N);
      }
    }
  }
}

TEST_CASE("moduli errors") {
  CHECK_THROWS_AS(emax::enumerate_components(Manifold::Product, 1, Rational(0)), emax::Error);
  CHECK_THROWS_AS(emax::enumerate_components(Manifold::Product, 0, Rational(2)), emax::Error);
  CHECK_THROWS_AS(emax::witness_class(Manifold::Product, 1, 0), emax::Error);
}
