#pragma once

// Dense univariate polynomials over Rational and GaussianRational.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/errors.hpp"
#include "cauchy/exact.hpp"

namespace cauchy {

/// deg 0 := -infinity
inline constexpr int kMinusInfinityDegree = std::numeric_limits<int>::min();

/// Coefficient k is the coefficient of X^k. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  using Scalar = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial monomial(T c, std::size_t power) {
    std::vector<T> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return Polynomial(std::move(coeffs));
  }
  /// The variable X.
  static Polynomial x() { return monomial(T(1), 1); }
  /// X - root.
  static Polynomial linear_factor(const T& root) { return Polynomial({-root, T(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const {
    return coeffs_.empty() ? kMinusInfinityDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation.
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& scalar) {
    if (scalar == T(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RealPoly = Polynomial<Rational>;
using ComplexPoly = Polynomial<GaussianRational>;

template <class T>
Polynomial<T> power(Polynomial<T> base, unsigned exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

/// Euclidean division over the coefficient field: a = b*q + r, deg r < deg b.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>(), a};
  std::vector<T> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  std::vector<T> quot(rem.size() - db);
  const T lead_inv = T(1) / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == T(0)) continue;
    T q = rem[k] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
    quot[k - db] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Quotient a / b; throws InvariantError when b does not divide a.
template <class T>
Polynomial<T> exact_quotient(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("polynomial division is not exact");
  return q;
}

template <class T>
Polynomial<T> monic(Polynomial<T> p) {
  if (p.is_zero()) return p;
  const T inv = T(1) / p.leading();
  return p *= inv;
}

/// Monic greatest common divisor; gcd(p, 0) = monic(p).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

/// F / gcd(F, F'), made monic: same roots, all simple.
template <class T>
Polynomial<T> square_free_part(const Polynomial<T>& f) {
  if (f.is_zero()) throw PreconditionError("square-free part of the zero polynomial");
  return monic(exact_quotient(f, gcd(f, f.derivative())));
}

/// F(alpha * X + beta), expanded by Horner's scheme.
template <class T>
Polynomial<T> compose_affine(const Polynomial<T>& f, const T& alpha, const T& beta) {
  const Polynomial<T> inner({beta, alpha});
  Polynomial<T> acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * inner + Polynomial<T>::constant(*it);
  }
  return acc;
}

/// Largest m with (X - root)^m dividing f, and the cofactor. f must be nonzero.
template <class T>
std::pair<Polynomial<T>, unsigned> divide_out_root(Polynomial<T> f, const T& root) {
  if (f.is_zero()) throw PreconditionError("cannot deflate the zero polynomial");
  const auto factor = Polynomial<T>::linear_factor(root);
  unsigned m = 0;
  while (f.degree() > 0 && f(root) == T(0)) {
    f = exact_quotient(f, factor);
    ++m;
  }
  return {std::move(f), m};
}

// Real / complex conversions.
ComplexPoly to_complex(const RealPoly& p);
RealPoly real_part(const ComplexPoly& p);
RealPoly imag_part(const ComplexPoly& p);
/// Conjugates every coefficient.
ComplexPoly conjugate(const ComplexPoly& p);

/// Positive rational c with p / c a primitive integer polynomial; 0 for p = 0.
Rational content(const RealPoly& p);
RealPoly primitive_part(const RealPoly& p);

/// Normalized text such as "Z^2 - 1" or "(1/2)*Z + i"; "0" for zero.
std::string to_string(const ComplexPoly& p, char variable = 'Z');
std::string to_string(const RealPoly& p, char variable = 'X');

}  // namespace cauchy
