#include "cauchy/stability.hpp"

#include <algorithm>
#include <cstdlib>

#include "cauchy/cauchy_index.hpp"
#include "cauchy/winding.hpp"

namespace cauchy {

namespace {

// F(iY) as a polynomial in Y.
ComplexPoly on_imaginary_axis(const ComplexPoly& f) {
  return compose_affine(f, GaussianRational::i(), GaussianRational(0));
}

// Y^m P(1/Y)
RealPoly reversed(const RealPoly& p, int m) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k < p.size(); ++k) coeffs[static_cast<std::size_t>(m) - k] = p.coeffs()[k];
  return RealPoly(std::move(coeffs));
}

Rational real_root_bound(const RealPoly& p) {
  return p.is_zero() ? Rational(1) : cauchy_radius(to_complex(p));
}

}  // namespace

HalfInt routh_index(const ComplexPoly& f) {
  if (f.is_zero()) throw PreconditionError("routh_index of the zero polynomial");
  const ComplexPoly t = on_imaginary_axis(f);
  const RealPoly re = real_part(t);
  const RealPoly im = imag_part(t);
  if (im.degree() >= re.degree()) return -cauchy_index_on_line(re, im);

  // Both terms with a radius r beyond every real root of re and im.
  const Rational r = max(real_root_bound(re), real_root_bound(im));
  const int m = std::max(re.degree(), im.degree());
  const HalfInt finite = cauchy_index(re, im, r, -r);
  const HalfInt at_infinity = cauchy_index(reversed(re, m), reversed(im, m), -r.inverse(), r.inverse());
  return finite + at_infinity;
}

int imaginary_axis_roots(const ComplexPoly& f) {
  if (f.is_zero()) throw PreconditionError("imaginary_axis_roots of the zero polynomial");
  // Sum over k of the distinct real roots of gcd(T, T', ..., T^(k)).
  ComplexPoly d = on_imaginary_axis(f);
  int total = 0;
  while (d.degree() >= 1) {
    const RealPoly re = real_part(d);
    const RealPoly im = imag_part(d);
    const RealPoly common = im.is_zero() ? re : (re.is_zero() ? im : gcd(re, im));
    if (common.degree() < 1) break;
    const int distinct = count_real_roots_on_line(common);
    if (distinct == 0) break;
    total += distinct;
    d = gcd(d, d.derivative());
  }
  return total;
}

HalfPlaneCount half_plane_count(const ComplexPoly& f) {
  if (f.degree() < 1) throw PreconditionError("half_plane_count needs degree >= 1");
  const HalfInt routh = routh_index(f);
  if (!routh.is_integer()) throw InvariantError("fractional Routh index");
  const int n = f.degree();
  const int axis = imaginary_axis_roots(f);
  const int difference = static_cast<int>(routh.integer_part());
  const int off_axis = n - axis;
  if ((off_axis + difference) % 2 != 0 || std::abs(difference) > off_axis) {
    throw InvariantError("Routh index inconsistent with the root count");
  }
  return {(off_axis + difference) / 2, (off_axis - difference) / 2, axis};
}

bool is_hurwitz_stable(const ComplexPoly& f) {
  return half_plane_count(f).negative == f.degree();
}

HalfInt routh_real_by_parity(const RealPoly& p) {
  if (p.degree() < 1) throw PreconditionError("routh_real_by_parity needs degree >= 1");
  const ComplexPoly t = on_imaginary_axis(to_complex(p));
  const RealPoly re = real_part(t);
  const RealPoly im = imag_part(t);
  // p - q is -Ind(re/im) for odd degree and +Ind(im/re) for even degree.
  const HalfInt p_minus_q =
      p.degree() % 2 == 1 ? -cauchy_index_on_line(re, im) : cauchy_index_on_line(im, re);
  return -p_minus_q;
}

HalfInt routh_real_unified(const RealPoly& p) {
  if (p.degree() < 1) throw PreconditionError("routh_real_unified needs degree >= 1");
  const int n = p.degree();
  std::vector<Rational> num(static_cast<std::size_t>(n));
  std::vector<Rational> den(static_cast<std::size_t>(n) + 1);
  for (int k = n, sign = 1; k >= 0; k -= 2, sign = -sign) {
    den[static_cast<std::size_t>(k)] = p.coefficient(static_cast<std::size_t>(k)) * Rational(sign);
  }
  for (int k = n - 1, sign = 1; k >= 0; k -= 2, sign = -sign) {
    num[static_cast<std::size_t>(k)] = p.coefficient(static_cast<std::size_t>(k)) * Rational(sign);
  }
  return cauchy_index_on_line(RealPoly(std::move(num)), RealPoly(std::move(den)));
}

}  // namespace cauchy
