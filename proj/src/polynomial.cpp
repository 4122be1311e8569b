#include "cauchy/polynomial.hpp"

#include <sstream>

#include "cauchy/sturm_chain.hpp"

namespace cauchy {

ComplexPoly to_complex(const RealPoly& p) {
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs.emplace_back(c);
  return ComplexPoly(std::move(coeffs));
}

RealPoly real_part(const ComplexPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c.re());
  return RealPoly(std::move(coeffs));
}

RealPoly imag_part(const ComplexPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c.im());
  return RealPoly(std::move(coeffs));
}

ComplexPoly conjugate(const ComplexPoly& p) {
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c.conj());
  return ComplexPoly(std::move(coeffs));
}

Rational content(const RealPoly& p) {
  if (p.is_zero()) return Rational(0);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

RealPoly primitive_part(const RealPoly& p) {
  if (p.is_zero()) return p;
  return p * content(p).inverse();
}

namespace {

// Coefficient text usable in front of "*Z^k"; parenthesized unless a plain integer.
std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) {
    const Rational& r = c.re();
    return r.is_integer() ? r.to_string() : "(" + r.to_string() + ")";
  }
  if (c.re().is_zero()) {
    const Rational& m = c.im();
    if (m == Rational(1)) return "i";
    return (m.is_integer() ? m.to_string() : "(" + m.to_string() + ")") + "*i";
  }
  std::string im = c.im().abs().to_string();
  return "(" + c.re().to_string() + (c.im().sign() > 0 ? " + " : " - ") + im + "*i)";
}

std::string power_text(char variable, std::size_t k) {
  std::string s(1, variable);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_string(const ComplexPoly& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    GaussianRational c = p.coeffs()[k];
    if (c.is_zero()) continue;
    // Pull out a minus sign for negative real or negative imaginary coefficients.
    bool negative = (c.is_real() && c.re().sign() < 0) ||
                    (c.re().is_zero() && c.im().sign() < 0);
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == GaussianRational(1);
    if (k == 0) {
      out << coefficient_text(c);
    } else if (unit) {
      out << power_text(variable, k);
    } else {
      out << coefficient_text(c) << "*" << power_text(variable, k);
    }
  }
  return out.str();
}

std::string to_string(const RealPoly& p, char variable) { return to_string(to_complex(p), variable); }

PseudoDivision pseudo_div(const RealPoly& s, const RealPoly& p) {
  if (p.is_zero()) throw DivisionByZero("pseudo-division by the zero polynomial");
  if (s.is_zero()) return {};
  const int raw = 1 + s.degree() - p.degree();
  unsigned d = raw > 0 ? static_cast<unsigned>(raw) : 0U;
  if (d % 2 == 1) ++d;
  Rational scale(1);
  for (unsigned k = 0; k < d; ++k) scale *= p.leading();
  auto [q, r] = divmod(s, p);
  return {q * scale, -(r * scale), d};
}

std::vector<int> SturmChain::signs_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const auto& p : polys_) signs.push_back(p(x).sign());
  return signs;
}

std::vector<int> SturmChain::signs_at_infinity(int direction) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const auto& p : polys_) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = p.leading().sign();
    if (direction < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return signs;
}

bool SturmChain::certificate_holds() const {
  if (polys_.size() < 2) return links_.empty();
  if (links_.size() + 2 != polys_.size()) return false;
  for (std::size_t k = 1; k + 1 < polys_.size(); ++k) {
    const ChainLink& link = links_[k - 1];
    if (link.a.sign() <= 0 || link.b.sign() <= 0) return false;
    if (polys_[k - 1] * link.a + polys_[k + 1] * link.b != link.q * polys_[k]) return false;
  }
  return true;
}

SturmChain sturm_chain(const RealPoly& r, const RealPoly& s) {
  if (r.is_zero()) {
    RealPoly divisor = s.is_zero() ? RealPoly() : monic(s);
    return SturmChain({RealPoly::constant(Rational(1))}, {}, std::move(divisor));
  }
  if (s.is_zero()) {
    return SturmChain({RealPoly(), RealPoly::constant(Rational(1))}, {}, monic(r));
  }

  std::vector<RealPoly> polys{primitive_part(s), primitive_part(r)};
  std::vector<ChainLink> links;
  while (true) {
    const RealPoly& prev = polys[polys.size() - 2];
    const RealPoly& cur = polys.back();
    PseudoDivision div = pseudo_div(prev, cur);
    if (div.remainder.is_zero()) break;
    Rational a(1);
    for (unsigned k = 0; k < div.exponent; ++k) a *= cur.leading();
    Rational b = content(div.remainder);
    RealPoly next = div.remainder * b.inverse();
    links.push_back({std::move(a), std::move(b), std::move(div.quotient)});
    polys.push_back(std::move(next));
  }

  // Remove the gcd, then scale by a positive constant so the tail is +1 or -1.
  RealPoly divisor = monic(polys.back());
  if (divisor.degree() > 0) {
    for (auto& p : polys) p = exact_quotient(p, divisor);
  }
  const Rational tail_scale = polys.back().leading().abs().inverse();
  for (auto& p : polys) p *= tail_scale;
  return SturmChain(std::move(polys), std::move(links), std::move(divisor));
}

}  // namespace cauchy
