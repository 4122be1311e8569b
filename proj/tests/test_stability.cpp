#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cauchy/stability.hpp"
#include "support.hpp"

using namespace cauchy;

namespace {

using G = GaussianRational;
const ComplexPoly Z = ComplexPoly::x();
ComplexPoly constant(const G& c) { return ComplexPoly::constant(c); }
HalfInt whole(long n) { return HalfInt::from_integer(n); }

HalfPlaneCount enumerate(const std::vector<G>& roots) {
  HalfPlaneCount c;
  for (const G& z : roots) {
    if (z.re().sign() > 0) ++c.positive;
    else if (z.re().sign() < 0) ++c.negative;
    else ++c.imaginary_axis;
  }
  return c;
}

}  // namespace

TEST_CASE("routh index examples") {
  CHECK(routh_index((Z - constant(G(1))) * (Z - constant(G(2)))) == whole(2));
  CHECK(routh_index(Z + constant(G(1))) == whole(-1));
  for (const G& z0 : {G(1, 1), G(1, -1), G(-1, 1), G(-1, -1), G(2), G(-2)}) {
    CHECK(routh_index(Z - constant(z0)) == whole(z0.re().sign()));
  }
  CHECK_THROWS_AS(routh_index(ComplexPoly()), PreconditionError);
}

TEST_CASE("half-plane counts") {
  const ComplexPoly real_stable{G(2), G(3), G(1)};  // X^2 + 3X + 2
  CHECK(half_plane_count(real_stable) == HalfPlaneCount{0, 2, 0});
  CHECK(half_plane_count(Z * Z + constant(G(1))) == HalfPlaneCount{0, 0, 2});
  CHECK(half_plane_count((Z - constant(G(1))) * (Z + constant(G(2)))) == HalfPlaneCount{1, 1, 0});
  // irrational axis roots +-i sqrt 2, doubled
  const ComplexPoly axis = power(Z * Z + constant(G(2)), 2) * (Z - constant(G(1)));
  CHECK(half_plane_count(axis) == HalfPlaneCount{1, 0, 4});
  CHECK(imaginary_axis_roots(axis) == 4);
  CHECK(imaginary_axis_roots(power(Z, 3) * (Z + constant(G(1)))) == 3);
  CHECK_THROWS_AS(half_plane_count(constant(G(4))), PreconditionError);
}

TEST_CASE("hurwitz stability") {
  CHECK(is_hurwitz_stable(ComplexPoly{G(2), G(3), G(1)}));
  CHECK_FALSE(is_hurwitz_stable(Z - constant(G(1))));
  CHECK_FALSE(is_hurwitz_stable(Z * Z + constant(G(1))));
}

TEST_CASE("routh index of random split polynomials") {
  testing::Gen gen(61);
  for (int n = 0; n < 150; ++n) {
    std::vector<G> roots;
    const int deg = static_cast<int>(gen.integer(1, 6));
    for (int k = 0; k < deg; ++k) {
      G z = gen.gaussian(6, 4);
      if (n % 3 != 0) {
        while (z.re().is_zero()) z = gen.gaussian(6, 4);
      }
      roots.push_back(z);
    }
    if (gen.coin()) roots.push_back(roots.back());
    const ComplexPoly f = testing::from_roots(roots, gen.gaussian(4, 3) + G(Rational(1, 2)));
    const HalfPlaneCount expected = enumerate(roots);
    CAPTURE(to_string(f));
    CHECK(half_plane_count(f) == expected);
    if (expected.imaginary_axis == 0) {
      CHECK(routh_index(f) == whole(expected.positive - expected.negative));
    }
  }
}

TEST_CASE("real formulations agree") {
  testing::Gen gen(62);
  for (int n = 0; n < 100; ++n) {
    const RealPoly p = gen.real_poly(static_cast<int>(gen.integer(1, 7)));
    const HalfInt parity = routh_real_by_parity(p);
    CHECK(parity == routh_real_unified(p));
    if (imaginary_axis_roots(to_complex(p)) == 0) {
      CHECK(parity == -routh_index(to_complex(p)));
    }
  }
  // X^2 + 3X + 2: q - p = 2 = n, the stable case
  CHECK(routh_real_unified(RealPoly{Rational(2), Rational(3), Rational(1)}) == whole(2));
}
