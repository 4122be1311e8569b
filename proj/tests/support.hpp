#pragma once

// Deterministic random instances and brute-force oracles shared by the tests.
// The oracles avoid Sturm chains entirely: they work from explicitly known
// roots and local sign analysis.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cauchy/exact.hpp"
#include "cauchy/index_value.hpp"
#include "cauchy/polynomial.hpp"
#include "cauchy/winding.hpp"

namespace cauchy::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= num_bound and 1 <= q <= max_den.
  Rational rational(long num_bound, long max_den) {
    return {integer(-num_bound, num_bound), integer(1, max_den)};
  }
  Rational nonzero_rational(long num_bound, long max_den) {
    Rational r;
    while (r.is_zero()) r = rational(num_bound, max_den);
    return r;
  }
  GaussianRational gaussian(long num_bound, long max_den) {
    return {rational(num_bound, max_den), rational(num_bound, max_den)};
  }

  RealPoly real_poly(int degree, long num_bound = 9, long max_den = 4) {
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.push_back(rational(num_bound, max_den));
    c.push_back(nonzero_rational(num_bound, max_den));
    return RealPoly(std::move(c));
  }
  ComplexPoly complex_poly(int degree, long num_bound = 9, long max_den = 4) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(gaussian(num_bound, max_den));
    while (c.back().is_zero()) c.back() = gaussian(num_bound, max_den);
    return ComplexPoly(std::move(c));
  }

  /// Axis-parallel rectangle with corners in [-b, b] on the grid 1/den.
  Rectangle rectangle(long bound, long den) {
    auto pair = [&] {
      Rational lo, hi;
      do {
        lo = Rational(integer(-bound * den, bound * den), den);
        hi = Rational(integer(-bound * den, bound * den), den);
      } while (lo == hi);
      if (hi < lo) std::swap(lo, hi);
      return std::pair{lo, hi};
    };
    auto [x0, x1] = pair();
    auto [y0, y1] = pair();
    return {x0, x1, y0, y1};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline ComplexPoly from_roots(const std::vector<GaussianRational>& roots,
                              const GaussianRational& lead = GaussianRational(1)) {
  ComplexPoly f = ComplexPoly::constant(lead);
  for (const auto& r : roots) f = f * ComplexPoly::linear_factor(r);
  return f;
}

inline RealPoly from_real_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
  RealPoly f = RealPoly::constant(lead);
  for (const auto& r : roots) f = f * RealPoly::linear_factor(r);
  return f;
}

/// Weight of a point with respect to a closed rectangle: 1 inside, 1/2 on an
/// edge, 1/4 at a vertex, 0 outside.
inline QuarterInt position_weight(const GaussianRational& z, const Rectangle& r) {
  const auto side = [](const Rational& v, const Rational& lo, const Rational& hi) {
    if (v < lo || hi < v) return 0;
    return (v == lo || v == hi) ? 1 : 2;
  };
  const int sx = side(z.re(), r.x0(), r.x1());
  const int sy = side(z.im(), r.y0(), r.y1());
  return QuarterInt::from_units(sx * sy);
}

/// Weighted enumeration of known roots (with multiplicity).
inline QuarterInt weighted_root_count(const std::vector<GaussianRational>& roots, const Rectangle& r) {
  QuarterInt total;
  for (const auto& z : roots) total += position_weight(z, r);
  return total;
}

/// Ind_a^b(R / S) for S = lead * prod (X - s_k) with the roots s_k listed
/// (repetitions allowed) and R nonzero at each s_k. Sign analysis at each pole:
/// an interior pole contributes (sign_right - sign_left) / 2, a pole at a
/// contributes sign_right / 2 and a pole at b contributes -sign_left / 2.
inline HalfInt pole_count_index(const RealPoly& r, const std::vector<Rational>& poles,
                                const Rational& lead, const Rational& a, const Rational& b) {
  std::vector<Rational> distinct = poles;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::int64_t units = 0;
  for (const Rational& s : distinct) {
    if (s < a || b < s) continue;
    int order = 0;
    int sign = lead.sign() * r(s).sign();
    for (const Rational& t : poles) {
      if (t == s) {
        ++order;
      } else {
        sign *= (s - t).sign();
      }
    }
    // near s: R/S ~ sign * (x - s)^(-order)
    const int right = sign;
    const int left = order % 2 == 0 ? sign : -sign;
    if (a < s) units -= left;
    if (s < b) units += right;
  }
  return HalfInt::from_units(units);
}

}  // namespace cauchy::testing
