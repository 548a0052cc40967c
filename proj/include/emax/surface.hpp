#ifndef EMAX_SURFACE_HPP
#define EMAX_SURFACE_HPP

#include "emax/errors.hpp"
#include "emax/numeric.hpp"
#include "emax/polynomial.hpp"
#include "emax/sturm.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace emax {

/// P(O + L_n) over a genus-g curve. The base metric has constant scalar
/// curvature 2 s_sigma with s_sigma = 2(1 - g)/n.
struct RuledSurface {
  int genus = 0;
  int degree = 1;
  Rational s_sigma;
};

RuledSurface make_surface(int genus, int degree);

enum class Parity { Even, Odd };

std::string_view to_string(Parity parity);

/// Kahler class in both coordinate systems:
///   [w] = 4 pi E_0 + 2 pi (1 - x) n / x C      (admissible form)
///   [w] = 4 pi (E + p C)                      (parity basis, n = 2k or 2k + 1)
struct KahlerClass {
  Rational x;
  Parity parity = Parity::Even;
  int k = 0;
  Rational p;

  int degree() const { return parity == Parity::Even ? 2 * k : 2 * k + 1; }
  /// Coefficients of pi in the admissible form: {4, 2(1 - x) n / x}.
  Rational e0_pi_coefficient() const { return Rational(4); }
  Rational fiber_pi_coefficient() const { return 2 * (1 - x) * degree() / x; }
};

KahlerClass class_from_x(const Rational& x, int degree);
KahlerClass class_from_p(Parity parity, int k, const Rational& p);

enum class SolutionCase { CaseOne, CaseTwoPlus, CaseTwoMinus };

std::string_view to_string(SolutionCase c);

/// One solved tuple (b, c, F, A) for the conformal factor (z + b)^-2.
/// Exact fields are filled whenever the value is rational.
struct EMCandidate {
  Rational x;
  Real b;
  Real c;
  Real A;
  RealPolynomial F;
  std::optional<Rational> b_exact;
  std::optional<Rational> c_exact;
  std::optional<Rational> A_exact;
  std::optional<RationalPolynomial> F_exact;
  /// Rational enclosure of c used by the certifier (degenerate when exact).
  RationalEnclosure c_enclosure;
  SolutionCase solution_case = SolutionCase::CaseOne;
  PositivityVerdict verdict;

  bool is_solution() const { return verdict.strictly_positive(); }
};

struct Thresholds {
  double x1 = 0.0;  // root of g: m'(-1) changes sign
  double x2 = 0.0;  // discriminant root beyond x1: positivity fails past it
  Rational s_sigma;
};

/// Shifted endpoints and E of the LeBrun-coordinate form of the Case 2
/// Kahler metric, as functions of LeBrun's parameter zeta > 0.
template <class T>
struct LebrunInvariants {
  T a_shift;
  T b_shift;
  T E;

  friend bool operator==(const LebrunInvariants&, const LebrunInvariants&) = default;
};

struct SolveOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
};

/// Closed-form pieces of the solution pipeline, generic over the scalar so
/// the same expression serves exact, double and 50-digit evaluation.
namespace formulas {

/// (x b^2 - 2 b + x), the Case 1 factor of the constraint.
template <class T>
T case_one_factor(const T& x, const T& b) {
  return x * b * b - 2 * b + x;
}

/// ((s x - 2) b^2 + 2 b x - s x), the Case 2 factor of the constraint.
template <class T>
T case_two_factor(const T& x, const T& s, const T& b) {
  return (s * x - 2) * b * b + 2 * b * x - s * x;
}

template <class T>
T constraint_residual(const T& x, const T& s, const T& b) {
  return case_one_factor(x, b) * case_two_factor(x, s, b);
}

/// c as a function of b, valid on the constraint set.
template <class T>
T c_from_b(const T& x, const T& s, const T& b) {
  return (-1 + 3 * b * x - s * x) / (2 * (3 * b * b - 1));
}

/// Constant scalar curvature A of h = (z + b)^-2 g.
template <class T>
T scal_h_constant(const T& x, const T& s, const T& b) {
  T b2 = b * b;
  T b3 = b2 * b;
  T b4 = b2 * b2;
  return 6 * (1 - 6 * b2 + b4 + 2 * b * x + 2 * b3 * x - s * x + b4 * s * x) / (3 * b2 - 1);
}

/// b = (1 + r)/x with r = sqrt(1 - x^2).
template <class T>
T case_one_b(const T& x, const T& r) {
  return (1 + r) / x;
}

/// c = x^2 (2 - s x + 3 r) / (4 (3 - 2 x^2 + 3 r)), r = sqrt(1 - x^2).
template <class T>
T case_one_c(const T& x, const T& s, const T& r) {
  return x * x * (2 - s * x + 3 * r) / (4 * (3 - 2 * x * x + 3 * r));
}

/// Numerator factor of m'(-1): 6 - 2x - 4x^2 + s x^2 + (6 - 3x) sqrt(1 - x^2).
template <class T>
T slope_factor(const T& x, const T& s) {
  using std::sqrt;
  T r = sqrt(1 - x * x);
  return 6 - 2 * x - 4 * x * x + s * x * x + (6 - 3 * x) * r;
}

/// D_s(x); the discriminant of m is x^2 D_s(x) / (4 (3 - 2x^2 + 3 sqrt(1 - x^2)))^2.
template <class T>
T discriminant_factor(const T& x, const T& s) {
  using std::sqrt;
  T r = sqrt(1 - x * x);
  T x2 = x * x;
  T x3 = x2 * x;
  T x4 = x2 * x2;
  return 12 + 12 * s * x - 19 * x2 - 12 * s * x3 + (7 + s * s) * x4 +
         6 * r * (2 + 2 * s * x - 2 * x2 - s * x3);
}

/// Roots of (x - 1) b^2 + x b - x = 0 for s = 2: b1 (plus) and b2 (minus).
template <class T>
T case_two_b(const T& x, bool plus) {
  using std::sqrt;
  T root = sqrt(x * (5 * x - 4));
  return (plus ? x + root : x - root) / (2 * (1 - x));
}

/// m(z) = (1 + x z) - c (1 - z^2).
template <class T>
Polynomial<T> profile_factor(const T& x, const T& c) {
  return Polynomial<T>({1 - c, x, c});
}

/// F(z) = (1 - z^2) m(z).
template <class T>
Polynomial<T> profile_polynomial(const T& x, const T& c) {
  return Polynomial<T>({T(1), T(0), T(-1)}) * profile_factor(x, c);
}

}  // namespace formulas

EMCandidate solve_case1(const Rational& x, const RuledSurface& surface, const SolveOptions& options = {});

/// Both Case 2 branches on the first Hirzebruch surface (s_sigma = 2).
/// At x = 4/5 the branches coincide with the Case 1 solution and a single
/// CaseOne candidate is returned.
std::vector<EMCandidate> solve_case2(const Rational& x, const RuledSurface& surface,
                                     const SolveOptions& options = {});

/// Rigorous positivity of m(z) = (1 + x z) - c (1 - z^2) on (-1, 1) for c in
/// the enclosure. m decreases in c on (-1, 1), so the upper end proves
/// positivity and the lower end proves failure.
PositivityVerdict certify_profile(const Rational& x, const RationalEnclosure& c);

/// Pointwise conformal scalar curvature
///   [-(z+b)^2 F'' + 6 (z+b) F' - 12 F + 2 s x (z+b)^2] / (1 + x z).
template <class T>
T scal_h_at(const Polynomial<T>& F, const T& x, const T& s, const T& b, const T& z) {
  T w = z + b;
  T num = -w * w * F.derivative(2)(z) + 6 * w * F.derivative(1)(z) - 12 * F(z) + 2 * s * x * w * w;
  return num / (1 + x * z);
}

Real scal_h_at(const EMCandidate& cand, const RuledSurface& surface, const Real& z);

/// Kahler scalar curvature (2 s x - F'') / (1 + x z).
template <class T>
T scal_g_at(const Polynomial<T>& F, const T& x, const T& s, const T& z) {
  return (2 * s * x - F.derivative(2)(z)) / (1 + x * z);
}

/// Laplacian of a function of z: -[F p']' / (1 + x z).
template <class T>
T laplacian_at(const Polynomial<T>& p, const Polynomial<T>& F, const T& x, const T& z) {
  Polynomial<T> dp = p.derivative(1);
  T flux_derivative = F.derivative(1)(z) * dp(z) + F(z) * dp.derivative(1)(z);
  return -flux_derivative / (1 + x * z);
}

Thresholds thresholds(const RuledSurface& surface);
Thresholds thresholds(const Rational& s_sigma);

/// Extended c, well defined off the constraint set; it reduces to c_from_b
/// whenever b solves the constraint. Evaluated for any b (the identity is
/// algebraic), though only |b| > 1 yields a globally defined metric.
template <class T>
T futaki_c(const T& x, const T& s, const T& b) {
  T lead = 3 * b * b - 1;
  T den = (b * b - 3) * x * x + 4 * b * x + (1 - 3 * b * b);
  if (lead == 0 || den == 0)
    throw Error(ErrorKind::SingularDenominator, "(b^2 - 3) x^2 + 4 b x + (1 - 3 b^2) or 3 b^2 - 1 vanishes");
  T correction = 3 * x * formulas::constraint_residual(x, s, b) / (2 * lead * den);
  return formulas::c_from_b(x, s, b) + correction;
}

template <class T>
LebrunInvariants<T> lebrun_invariants(const T& zeta) {
  if (!(zeta > 0)) throw Error(ErrorKind::InvalidArgument, "lebrun_invariants requires zeta > 0");
  T shifted = zeta + 1;
  T a_shift = zeta / (2 * shifted * shifted);
  return {a_shift, a_shift + 1, -zeta / (shifted * shifted)};
}

}  // namespace emax

#endif  // EMAX_SURFACE_HPP
