#include "cauchy/cauchy_index.hpp"

#include <cstdlib>

namespace cauchy {

HalfInt sign_changes_of_signs(std::span<const int> signs) {
  std::int64_t twice = 0;
  for (std::size_t k = 1; k < signs.size(); ++k) twice += std::abs(signs[k - 1] - signs[k]);
  return HalfInt::from_units(twice);
}

HalfInt sign_changes(std::span<const Rational> values) {
  std::vector<int> signs;
  signs.reserve(values.size());
  for (const auto& v : values) signs.push_back(v.sign());
  return sign_changes_of_signs(signs);
}

HalfInt sign_var_diff(const SturmChain& chain, const Rational& a, const Rational& b) {
  if (a == b) return {};
  return sign_changes_of_signs(chain.signs_at(a)) - sign_changes_of_signs(chain.signs_at(b));
}

HalfInt sign_var_diff_on_line(const SturmChain& chain) {
  return sign_changes_of_signs(chain.signs_at_infinity(-1)) -
         sign_changes_of_signs(chain.signs_at_infinity(+1));
}

HalfInt cauchy_index(const RealPoly& r, const RealPoly& s, const Rational& a, const Rational& b) {
  if (r.is_zero() || s.is_zero() || a == b) return {};
  if (b < a) return -cauchy_index(r, s, b, a);
  return sign_var_diff(sturm_chain(r, s), a, b);
}

HalfInt cauchy_index_on_line(const RealPoly& r, const RealPoly& s) {
  if (r.is_zero() || s.is_zero()) return {};
  return sign_var_diff_on_line(sturm_chain(r, s));
}

HalfInt count_real_roots(const RealPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw PreconditionError("count_real_roots: zero polynomial");
  return cauchy_index(p.derivative(), p, a, b);
}

int count_real_roots_on_line(const RealPoly& p) {
  if (p.is_zero()) throw PreconditionError("count_real_roots_on_line: zero polynomial");
  const HalfInt n = cauchy_index_on_line(p.derivative(), p);
  if (!n.is_integer()) throw InvariantError("fractional real root count on the line");
  return static_cast<int>(n.integer_part());
}

int descartes_bound(std::span<const Rational> coeffs) {
  std::vector<int> signs;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) signs.push_back(c.sign());
  }
  return static_cast<int>(sign_changes_of_signs(signs).integer_part());
}

InversionTriple inversion_check(const RealPoly& p, const RealPoly& q, const Rational& a,
                                const Rational& b) {
  for (const Rational* x : {&a, &b}) {
    if (p(*x).is_zero() && q(*x).is_zero()) {
      throw PreconditionError("inversion_check: P and Q share a zero at endpoint " +
                              x->to_string());
    }
  }
  const std::vector<Rational> at_a{p(a), q(a)};
  const std::vector<Rational> at_b{p(b), q(b)};
  return {cauchy_index(q, p, a, b), cauchy_index(p, q, a, b),
          sign_changes(at_a) - sign_changes(at_b)};
}

}  // namespace cauchy
