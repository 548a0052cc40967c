#include "emax/surface.hpp"

#include "emax/roots.hpp"

#include <stdexcept>
#include <string>

namespace emax {

namespace {

constexpr int kMaxRefinements = 8;

void require_in_cone(const Rational& x) {
  if (!(x > 0 && x < 1)) throw Error(ErrorKind::OutOfCone, "x = " + to_string(x) + " is outside (0, 1)");
}

// nullopt when the enclosure is too wide to decide.
std::optional<PositivityVerdict> try_certify_profile(const Rational& x, const RationalEnclosure& c) {
  const Interval domain = Interval::open(Rational(-1), Rational(1));
  PositivityVerdict upper = certify_positive(formulas::profile_factor(x, c.hi), domain);
  if (c.lo == c.hi || upper.strictly_positive()) return upper;
  PositivityVerdict lower = certify_positive(formulas::profile_factor(x, c.lo), domain);
  if (lower.status == Positivity::ChangesSign) return lower;
  return std::nullopt;
}

RationalEnclosure case_one_c_enclosure(const Rational& x, const Rational& s, const RationalEnclosure& r) {
  // c is a Mobius function of r, hence monotone on the enclosure.
  Rational at_lo = formulas::case_one_c(x, s, r.lo);
  Rational at_hi = formulas::case_one_c(x, s, r.hi);
  if (at_lo <= at_hi) return {at_lo, at_hi};
  return {at_hi, at_lo};
}

void fill_exact(EMCandidate& cand, const Rational& s, const Rational& b, const Rational& c) {
  cand.b_exact = b;
  cand.c_exact = c;
  cand.A_exact = formulas::scal_h_constant(cand.x, s, b);
  cand.F_exact = formulas::profile_polynomial(cand.x, c);
  cand.b = to_real(b);
  cand.c = to_real(c);
  cand.A = to_real(*cand.A_exact);
  cand.F = cand.F_exact->cast<Real>();
  cand.c_enclosure = {c, c};
}

}  // namespace

RuledSurface make_surface(int genus, int degree) {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "genus must be non-negative");
  if (degree < 1) throw Error(ErrorKind::InvalidDegree, "degree must be >= 1, got " + std::to_string(degree));
  return {genus, degree, Rational(2 * (1 - genus), degree)};
}

std::string_view to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

std::string_view to_string(SolutionCase c) {
  switch (c) {
    case SolutionCase::CaseOne: return "case_one";
    case SolutionCase::CaseTwoPlus: return "case_two_plus";
    case SolutionCase::CaseTwoMinus: return "case_two_minus";
  }
  return "unknown";
}

KahlerClass class_from_x(const Rational& x, int degree) {
  require_in_cone(x);
  if (degree < 1) throw Error(ErrorKind::InvalidDegree, "degree must be >= 1");
  KahlerClass out;
  out.x = x;
  if (degree % 2 == 0) {
    out.parity = Parity::Even;
    out.k = degree / 2;
    out.p = Rational(out.k) / x;
  } else {
    out.parity = Parity::Odd;
    out.k = (degree - 1) / 2;
    out.p = (Rational(2 * out.k + 1) / x - 1) / 2;
  }
  return out;
}

KahlerClass class_from_p(Parity parity, int k, const Rational& p) {
  KahlerClass out;
  out.parity = parity;
  out.k = k;
  out.p = p;
  if (parity == Parity::Even) {
    if (k < 1 || !(Rational(k) < p))
      throw Error(ErrorKind::OutOfCone, "even parity needs 1 <= k < p (k = " + std::to_string(k) + ")");
    out.x = Rational(k) / p;
  } else {
    if (k < 0 || !(Rational(k) < p))
      throw Error(ErrorKind::OutOfCone, "odd parity needs 0 <= k < p (k = " + std::to_string(k) + ")");
    out.x = Rational(2 * k + 1) / (2 * p + 1);
  }
  return out;
}

PositivityVerdict certify_profile(const Rational& x, const RationalEnclosure& c) {
  if (auto verdict = try_certify_profile(x, c)) return *verdict;
  const Interval domain = Interval::open(Rational(-1), Rational(1));
  PositivityVerdict upper = certify_positive(formulas::profile_factor(x, c.hi), domain);
  return {Positivity::TouchesZero, upper.witness.value_or(Rational(0))};
}

EMCandidate solve_case1(const Rational& x, const RuledSurface& surface, const SolveOptions& options) {
  require_in_cone(x);
  const Rational& s = surface.s_sigma;
  const Rational radicand = 1 - x * x;

  EMCandidate cand;
  cand.x = x;
  cand.solution_case = SolutionCase::CaseOne;

  if (auto r = exact_sqrt(radicand)) {
    Rational b = formulas::case_one_b(x, *r);
    fill_exact(cand, s, b, formulas::case_one_c(x, s, *r));
    cand.verdict = certify_positive(formulas::profile_factor(x, *cand.c_exact), Interval::open(Rational(-1), Rational(1)));
    return cand;
  }

  const Real xr = to_real(x);
  const Real sr = to_real(s);
  const Real r = sqrt(to_real(radicand));
  cand.b = formulas::case_one_b(xr, r);
  cand.c = formulas::case_one_c(xr, sr, r);
  cand.A = formulas::scal_h_constant(xr, sr, cand.b);
  cand.F = formulas::profile_polynomial(xr, cand.c);

  unsigned bits = options.precision_bits;
  for (int attempt = 0; attempt <= kMaxRefinements; ++attempt, bits *= 2) {
    cand.c_enclosure = case_one_c_enclosure(x, s, sqrt_enclosure(radicand, bits));
    if (auto verdict = try_certify_profile(x, cand.c_enclosure)) {
      cand.verdict = *verdict;
      return cand;
    }
  }
  cand.verdict = certify_profile(x, cand.c_enclosure);
  return cand;
}

std::vector<EMCandidate> solve_case2(const Rational& x, const RuledSurface& surface, const SolveOptions& options) {
  if (surface.s_sigma != 2)
    throw Error(ErrorKind::WrongSurface, "Case 2 needs s_sigma = 2 (genus 0, degree 1), got " + to_string(surface.s_sigma));
  const Rational threshold(4, 5);
  if (x == threshold) return {solve_case1(x, surface, options)};
  if (!(x > threshold && x < 1))
    throw Error(ErrorKind::CaseTwoOutOfRange, "Case 2 needs 4/5 < x < 1, got " + to_string(x));

  const Rational s(2);
  const Rational c = (1 - x) / 2;
  const Rational radicand = x * (5 * x - 4);
  const auto root = exact_sqrt(radicand);
  const PositivityVerdict verdict =
      certify_positive(formulas::profile_factor(x, c), Interval::open(Rational(-1), Rational(1)));

  std::vector<EMCandidate> out;
  for (bool plus : {true, false}) {
    EMCandidate cand;
    cand.x = x;
    cand.solution_case = plus ? SolutionCase::CaseTwoPlus : SolutionCase::CaseTwoMinus;
    if (root) {
      Rational b = (plus ? x + *root : x - *root) / (2 * (1 - x));
      fill_exact(cand, s, b, c);
    } else {
      cand.b = formulas::case_two_b(to_real(x), plus);
      cand.c = to_real(c);
      cand.c_exact = c;
      cand.A = formulas::scal_h_constant(to_real(x), to_real(s), cand.b);
      cand.F_exact = formulas::profile_polynomial(x, c);
      cand.F = cand.F_exact->cast<Real>();
      cand.c_enclosure = {c, c};
    }
    cand.verdict = verdict;
    out.push_back(std::move(cand));
  }
  return out;
}

Real scal_h_at(const EMCandidate& cand, const RuledSurface& surface, const Real& z) {
  return scal_h_at(cand.F, to_real(cand.x), to_real(surface.s_sigma), cand.b, z);
}

Thresholds thresholds(const RuledSurface& surface) { return thresholds(surface.s_sigma); }

Thresholds thresholds(const Rational& s_sigma) {
  if (!(s_sigma < 0))
    throw Error(ErrorKind::NotNegativeCurvature, "thresholds need s_sigma < 0, got " + to_string(s_sigma));
  const double s = to_double(s_sigma);
  auto slope = [s](double x) { return formulas::slope_factor(x, s); };
  auto disc = [s](double x) { return formulas::discriminant_factor(x, s); };

  Thresholds out;
  out.s_sigma = s_sigma;
  out.x1 = find_root_bracketed(slope, 0.0, 1.0);
  out.x2 = find_root_bracketed(disc, out.x1, 1.0);

  const double bound = 1.0 / (s * s + 2.0);
  if (!(bound < out.x1 && out.x1 < out.x2 && out.x2 < 1.0))
    throw std::logic_error("threshold ordering 1/(s^2+2) < x1 < x2 < 1 violated");
  return out;
}

}  // namespace emax
