#pragma once

// Exact scalars: arbitrary precision rationals and Gaussian rationals.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace cauchy {

/// Canonical arbitrary precision rational number (denominator > 0, reduced).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q" (decimal digits only).
  static Rational parse(std::string_view text);

  /// Returns 2^exponent for any signed exponent.
  static Rational power_of_two(long exponent);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return value_.get_d(); }

  /// Greatest integer <= value, and least integer >= value.
  mpz_class floor() const;
  mpz_class ceil() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2, the squared modulus.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& other);
  GaussianRational& operator-=(const GaussianRational& other);
  GaussianRational& operator*=(const GaussianRational& other);
  GaussianRational& operator/=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs += rhs;
  }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs -= rhs;
  }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs *= rhs;
  }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs /= rhs;
  }
  friend GaussianRational operator-(const GaussianRational& value) {
    return {-value.re_, -value.im_};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& out, const GaussianRational& value);

/// Rational sandwich lower <= |z| <= upper.
struct ModulusBounds {
  Rational lower;  // max(|re|, |im|)
  Rational upper;  // |re| + |im|
};

ModulusBounds modulus_bounds(const GaussianRational& z);

/// Rounds to the nearest multiple of 2^-bits (ties away from zero).
Rational round_dyadic(const Rational& value, unsigned bits);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace cauchy
