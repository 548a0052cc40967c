#ifndef EMAX_POLYNOMIAL_HPP
#define EMAX_POLYNOMIAL_HPP

#include "emax/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace emax {

/// Dense univariate polynomial in the fibre coordinate z, coefficients in
/// ascending degree order. Trailing zero coefficients are trimmed, so the
/// zero polynomial has no coefficients and degree -1.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }

  static Polynomial constant(const Scalar& value) { return Polynomial({value}); }
  static Polynomial monomial(const Scalar& coeff, std::size_t power) {
    std::vector<Scalar> c(power + 1, Scalar(0));
    c[power] = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of z^i; zero beyond the degree.
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  /// Horner evaluation. Exact when both Scalar and Arg are exact types.
  template <class Arg>
  Arg operator()(const Arg& z) const {
    Arg acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Arg(*it);
    return acc;
  }

  Polynomial derivative(unsigned order = 1) const {
    std::vector<Scalar> c = coeffs_;
    for (unsigned o = 0; o < order && !c.empty(); ++o) {
      std::vector<Scalar> d;
      d.reserve(c.size() - 1);
      for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Scalar(static_cast<long>(i)));
      c = std::move(d);
    }
    return Polynomial(std::move(c));
  }

  template <class Other>
  Polynomial<Other> cast() const {
    std::vector<Other> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(Other(v));
    return Polynomial<Other>(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : coeffs_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;
using RealPolynomial = Polynomial<Real>;

template <class Scalar, class Arg>
Arg eval(const Polynomial<Scalar>& p, const Arg& z) {
  return p(z);
}

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p, unsigned order) {
  return p.derivative(order);
}

}  // namespace emax

#endif  // EMAX_POLYNOMIAL_HPP
