#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cauchy/brouwer.hpp"
#include "support.hpp"

using namespace cauchy;

namespace {

using G = GaussianRational;
using Kind = FixedPointResult::Kind;
const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();
BivariatePoly c(const Rational& v) { return BivariatePoly::constant(v); }
const Rectangle square = Rectangle::centered_square(Rational(1));

bool holds_fixed_point(const FixedPointResult& r, const G& z) {
  switch (r.kind) {
    case Kind::exact_point: return r.point == z;
    case Kind::cell: return r.rectangle->contains(z.re(), z.im());
    case Kind::boundary_segment: return false;
  }
  return false;
}

void check_residual(const PlaneMap& f, const FixedPointResult& r, const Rational& target) {
  if (r.kind == Kind::exact_point) {
    CHECK(f.p(r.point.re(), r.point.im()) == r.point.re());
    CHECK(f.q(r.point.re(), r.point.im()) == r.point.im());
    return;
  }
  REQUIRE(r.kind == Kind::cell);
  const G m = r.rectangle->center();
  const Rational scale = Rational(static_cast<long>(std::max(f.p.total_degree(), f.q.total_degree()))) *
                         max(f.p.max_coefficient(), f.q.max_coefficient());
  const Rational bound = Rational(2) * target * (Rational(1) + scale);
  CHECK((f.p(m.re(), m.im()) - m.re()).abs() <= bound);
  CHECK((f.q(m.re(), m.im()) - m.im()).abs() <= bound);
}

}  // namespace

TEST_CASE("bivariate polynomials") {
  const BivariatePoly p = X * X * c(3) - X * Y + c(Rational(1, 2));
  CHECK(p.total_degree() == 2);
  CHECK(p(Rational(1), Rational(2)) == Rational(3, 2));
  CHECK(p.max_coefficient() == Rational(3));
  CHECK((p - p).is_zero());
  // t -> p(a + t (b - a)) along 0 -> 1 + i equals 3t^2 - t^2 + 1/2
  CHECK(p.restrict_to_segment(G(0), G(1, 1)) == RealPoly{Rational(1, 2), Rational(0), Rational(2)});
}

TEST_CASE("fixed point examples") {
  const Rational target(1, 16);
  SUBCASE("contraction to the origin") {
    const PlaneMap f{X * c(Rational(1, 2)), Y * c(Rational(1, 2))};
    const FixedPointResult r = fixed_point_search(f, square, target);
    CHECK(holds_fixed_point(r, G(0)));
    check_residual(f, r, target);
  }
  SUBCASE("constant map") {
    const PlaneMap f{c(Rational(1, 3)), c(Rational(-1, 2))};
    const FixedPointResult r = fixed_point_search(f, square, target);
    REQUIRE(r.kind == Kind::exact_point);
    CHECK(r.point == G(Rational(1, 3), Rational(-1, 2)));
  }
  SUBCASE("swap and halve") {
    const PlaneMap f{Y * c(Rational(1, 2)), X * c(Rational(1, 2))};
    const FixedPointResult r = fixed_point_search(f, square, target);
    CHECK(holds_fixed_point(r, G(0)));
  }
  SUBCASE("a non-dyadic fixed point ends in a cell") {
    const PlaneMap f{X * c(Rational(1, 4)) + c(Rational(1, 5)), Y * c(Rational(1, 4)) - c(Rational(1, 7))};
    const FixedPointResult r = fixed_point_search(f, square, target);
    REQUIRE(r.kind == Kind::cell);
    CHECK(r.rectangle->diameter_squared() <= target * target);
    CHECK(holds_fixed_point(r, G(Rational(4, 15), Rational(-4, 21))));
    CHECK(r.index == QuarterInt::from_integer(1));
    check_residual(f, r, target);
  }
}

TEST_CASE("an irrational fixed point on a bisection line is bracketed") {
  // g = id - f vanishes at (1/sqrt 2, 0), which lies on the first horizontal cut
  const PlaneMap f{X - (X * X * c(2) - c(1)) * c(Rational(1, 4)), Y * c(Rational(1, 2))};
  const Rational target(1, 256);
  const FixedPointResult r = fixed_point_search(f, Rectangle(0, 1, -1, 1), target);
  REQUIRE(r.kind == Kind::boundary_segment);
  CHECK(r.segment_from.im() == Rational(0));
  CHECK(r.segment_to.im() == Rational(0));
  CHECK(r.segment_to.re() - r.segment_from.re() <= target);
  CHECK(r.segment_from.re() * r.segment_from.re() * Rational(2) < Rational(1));
  CHECK(r.segment_to.re() * r.segment_to.re() * Rational(2) > Rational(1));
}

TEST_CASE("initial index of affine contractions is one") {
  testing::Gen gen(71);
  for (int n = 0; n < 40; ++n) {
    const Rational alpha(gen.integer(0, 7), 8);
    // |alpha| + |c| < 1 keeps the square invariant
    const Rational c1 = (Rational(1) - alpha) * Rational(gen.integer(-6, 6), 7);
    const Rational c2 = (Rational(1) - alpha) * Rational(gen.integer(-10, 10), 11);
    const PlaneMap f{X * c(alpha) + c(c1), Y * c(alpha) + c(c2)};
    CHECK(displacement_index(f, square) == QuarterInt::from_integer(1));
  }
}

TEST_CASE("maps without the index are rejected") {
  // translation by (3, 0): no fixed point, index 0
  const PlaneMap shift{X + c(3), Y};
  CHECK_THROWS_AS(fixed_point_search(shift, square, Rational(1, 8)), PreconditionError);
  const PlaneMap f{X * c(Rational(1, 2)), Y * c(Rational(1, 2))};
  CHECK_THROWS_AS(fixed_point_search(f, square, Rational(0)), PreconditionError);
}
