#include "emax/sturm.hpp"

#include "emax/errors.hpp"

#include <functional>
#include <stdexcept>

namespace emax {

Interval Interval::open(Rational lo, Rational hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "interval requires lo < hi");
  return {std::move(lo), std::move(hi), true, true};
}

Interval Interval::closed(Rational lo, Rational hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "interval requires lo < hi");
  return {std::move(lo), std::move(hi), false, false};
}

bool Interval::contains(const Rational& z) const {
  bool above = open_lo ? z > lo : z >= lo;
  bool below = open_hi ? z < hi : z <= hi;
  return above && below;
}

std::string_view to_string(Positivity status) {
  switch (status) {
    case Positivity::StrictlyPositive: return "strictly_positive";
    case Positivity::TouchesZero: return "touches_zero";
    case Positivity::ChangesSign: return "changes_sign";
  }
  return "unknown";
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& dividend,
                                                        const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const Rational lead = divisor.leading();
  if (dividend.degree() < dd) return {RationalPolynomial{}, dividend};

  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), Rational(0));
  for (int i = dividend.degree(); i >= dd; --i) {
    Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

namespace {

RationalPolynomial monic(const RationalPolynomial& p) {
  Rational lead = p.leading();
  return p * Rational(1 / abs(lead));
}

int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Chain divided through by gcd(p, p'); its first member is squarefree with the
// same distinct roots as p, and no two consecutive members share a root.
std::vector<RationalPolynomial> reduced_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain = sturm_sequence(p);
  const RationalPolynomial& gcd = chain.back();
  if (gcd.degree() <= 0) return chain;
  for (auto& member : chain) member = divmod(member, gcd).first;
  return chain;
}

int variations(const std::vector<RationalPolynomial>& chain, const Rational& z) {
  int count = 0;
  int last = 0;
  for (const auto& member : chain) {
    int s = sign(member(z));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at_infinity(const std::vector<RationalPolynomial>& chain, bool positive) {
  int count = 0;
  int last = 0;
  for (const auto& member : chain) {
    int s = sign(member.leading());
    if (!positive && member.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Roots strictly inside (a, b), a < b.
std::size_t count_open(const std::vector<RationalPolynomial>& chain, const Rational& a, const Rational& b) {
  int n = variations(chain, a) - variations(chain, b);
  if (chain.front()(b) == 0) --n;
  return static_cast<std::size_t>(n);
}

Rational floor_rational(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

// Rational with smallest denominator in [lo, hi], 0 <= lo <= hi.
Rational simplest_between_nonneg(const Rational& lo, const Rational& hi) {
  Rational fl = floor_rational(lo);
  if (fl == lo) return fl;
  if (fl < floor_rational(hi)) return fl + 1;
  return fl + 1 / simplest_between_nonneg(1 / (hi - fl), 1 / (lo - fl));
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between_nonneg(-hi, -lo);
  return simplest_between_nonneg(lo, hi);
}

}  // namespace

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "Sturm sequence of the zero polynomial");
  std::vector<RationalPolynomial> chain{monic(p)};
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(monic(d));
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    RationalPolynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(monic(-r));
  }
  return chain;
}

std::size_t sturm_root_count(const RationalPolynomial& p, const Interval& iv) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root count of the zero polynomial");
  auto chain = reduced_chain(p);
  std::size_t n = count_open(chain, iv.lo, iv.hi);
  if (!iv.open_lo && p(iv.lo) == 0) ++n;
  if (!iv.open_hi && p(iv.hi) == 0) ++n;
  return n;
}

std::size_t real_root_count(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root count of the zero polynomial");
  auto chain = reduced_chain(p);
  return static_cast<std::size_t>(variations_at_infinity(chain, false) - variations_at_infinity(chain, true));
}

std::vector<RationalEnclosure> isolate_roots(const RationalPolynomial& p, const Interval& iv) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root isolation of the zero polynomial");
  std::vector<RationalEnclosure> out;
  if (p.degree() == 0) return out;
  auto chain = reduced_chain(p);
  const RationalPolynomial& q = chain.front();

  if (!iv.open_lo && q(iv.lo) == 0) out.push_back({iv.lo, iv.lo});

  // Accepted intervals have non-root ends strictly inside iv, so every gap
  // between consecutive enclosures has constant nonzero sign.
  std::function<void(const Rational&, const Rational&)> split = [&](const Rational& a, const Rational& b) {
    std::size_t n = count_open(chain, a, b);
    if (n == 0) return;
    if (n == 1 && a != iv.lo && b != iv.hi && q(a) != 0 && q(b) != 0) {
      out.push_back({a, b});
      return;
    }
    Rational m = (a + b) / 2;
    split(a, m);
    if (q(m) == 0) out.push_back({m, m});
    split(m, b);
  };
  split(iv.lo, iv.hi);

  if (!iv.open_hi && q(iv.hi) == 0) out.push_back({iv.hi, iv.hi});
  return out;
}

PositivityVerdict certify_positive(const RationalPolynomial& p, const Interval& iv) {
  if (p.is_zero()) return {Positivity::TouchesZero, iv.midpoint()};
  if (p.degree() == 0) {
    if (p.leading() > 0) return {Positivity::StrictlyPositive, std::nullopt};
    return {Positivity::ChangesSign, iv.midpoint()};
  }

  auto roots = isolate_roots(p, iv);
  if (roots.empty()) {
    Rational mid = iv.midpoint();
    if (p(mid) > 0) return {Positivity::StrictlyPositive, std::nullopt};
    return {Positivity::ChangesSign, mid};
  }

  std::vector<Rational> samples;
  if (roots.front().lo > iv.lo) samples.push_back((iv.lo + roots.front().lo) / 2);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  if (roots.back().hi < iv.hi) samples.push_back((roots.back().hi + iv.hi) / 2);
  for (const auto& s : samples) {
    if (p(s) < 0) return {Positivity::ChangesSign, s};
  }

  // p >= 0 on iv with at least one zero: report the first root.
  RationalEnclosure root = roots.front();
  if (root.lo == root.hi) return {Positivity::TouchesZero, root.lo};
  auto chain = reduced_chain(p);
  const RationalPolynomial& q = chain.front();
  const Rational target_width = Rational(1, Integer(1) << 80);
  int sign_lo = sign(q(root.lo));
  while (root.width() > target_width) {
    Rational m = (root.lo + root.hi) / 2;
    int sm = sign(q(m));
    if (sm == 0) return {Positivity::TouchesZero, m};
    if (sm == sign_lo) root.lo = m;
    else root.hi = m;
  }
  Rational candidate = simplest_between(root.lo, root.hi);
  if (q(candidate) == 0) return {Positivity::TouchesZero, candidate};
  return {Positivity::TouchesZero, Rational((root.lo + root.hi) / 2)};
}

}  // namespace emax
