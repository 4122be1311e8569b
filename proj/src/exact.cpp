#include "cauchy/exact.hpp"

#include <ostream>

#include "cauchy/errors.hpp"

namespace cauchy {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view digits) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty()) throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    for (char c : body) {
      if (c < '0' || c > '9') throw PreconditionError("malformed rational: '" + std::string(text) + "'");
    }
    std::string s(digits);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::power_of_two(long exponent) {
  mpz_class p = 1;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  if (exponent < 0) return Rational(mpz_class(1), p);
  return Rational(p);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << value.to_string();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of Gaussian zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag = im_ == Rational(1) ? "i" : (im_ == Rational(-1) ? "-i" : im_.to_string() + "i");
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.to_string() + "+" + imag;
  return re_.to_string() + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  // (x + yi)(x' + y'i) = (xx' - yy') + (xy' + yx')i
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& other) {
  return *this *= other.inverse();
}

std::ostream& operator<<(std::ostream& out, const GaussianRational& value) {
  return out << value.to_string();
}

ModulusBounds modulus_bounds(const GaussianRational& z) {
  Rational re = z.re().abs();
  Rational im = z.im().abs();
  return {max(re, im), re + im};
}

Rational round_dyadic(const Rational& value, unsigned bits) {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  // nearest integer to value * 2^bits, ties away from zero
  const mpq_class scaled = value.raw() * mpq_class(scale);
  mpq_class shifted = ::abs(scaled) + mpq_class(1, 2);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  if (sgn(scaled) < 0) n = -n;
  return Rational(n, scale);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  const Rational whole(lo.floor());
  if (whole == lo) return lo;
  if (whole + Rational(1) <= hi) return whole + Rational(1);
  return whole + simplest_between((hi - whole).inverse(), (lo - whole).inverse()).inverse();
}

}  // namespace cauchy
