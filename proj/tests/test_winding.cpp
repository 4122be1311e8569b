#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cauchy/winding.hpp"
#include "support.hpp"

using namespace cauchy;

namespace {

using G = GaussianRational;
QuarterInt quarter(long units) { return QuarterInt::from_units(units); }
QuarterInt whole(long n) { return QuarterInt::from_integer(n); }
const G I = G::i();
const ComplexPoly Z = ComplexPoly::x();
ComplexPoly constant(const G& c) { return ComplexPoly::constant(c); }

bool vertices_clear(const ComplexPoly& f, const Rectangle& r) {
  for (const auto& v : r.vertices()) {
    if (f(v).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("segment indices of linear maps") {
  CHECK(segment_index(constant(G(1)) + Z * I, G(0), G(1)) == quarter(1));
  CHECK(segment_index(Z, G(0), G(1)) == whole(0));
  CHECK(segment_index(constant(I) - Z * I, G(0), G(1)) == whole(0));
  // antisymmetry
  const ComplexPoly f = Z * Z + constant(G(1, 1));
  CHECK(segment_index(f, G(2, -1), G(-1, 3)) == -segment_index(f, G(-1, 3), G(2, -1)));
  CHECK_THROWS_AS(segment_index(Z, G(1), G(1)), PreconditionError);
}

TEST_CASE("rectangle indices") {
  const ComplexPoly small{G(-12), G(-3), G(-2), G(-2), G(-5), G(1)};
  CHECK(rectangle_index(small, Rectangle::centered_square(Rational(1))) == whole(2));
  CHECK(rectangle_index(Z, Rectangle(1, 2, 1, 2)) == whole(0));
  CHECK_THROWS_AS(rectangle_index(ComplexPoly(), Rectangle(0, 1, 0, 1)), PreconditionError);
  CHECK_THROWS_AS(Rectangle(1, 1, 0, 1), PreconditionError);
}

TEST_CASE("linear factors over a 5 x 5 grid of positions") {
  const Rectangle unit(0, 1, 0, 1);
  const std::vector<Rational> coords{Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (const auto& x : coords) {
    for (const auto& y : coords) {
      const G z0(x, y);
      CAPTURE(z0.to_string());
      CHECK(rectangle_index(Z - constant(z0), unit) == testing::position_weight(z0, unit));
    }
  }
}

TEST_CASE("root counting examples") {
  CHECK(count_roots_in_rectangle(Z * Z + constant(G(1)), Rectangle(-2, 2, 0, 2)) == whole(1));
  CHECK(count_roots_in_rectangle(Z * Z - constant(G(1)), Rectangle(-1, 1, -1, 1)) == whole(1));
  // 1/2 lies on the edge y = 0 of [0,1]^2: a double edge root counts 2 * 1/2
  const ComplexPoly half_root = Z - constant(G(Rational(1, 2)));
  CHECK(count_roots_in_rectangle(half_root * half_root, Rectangle(0, 1, 0, 1)) == whole(1));
  const ComplexPoly center_root = Z - constant(G(Rational(1, 2), Rational(1, 2)));
  CHECK(count_roots_in_rectangle(center_root * center_root, Rectangle(0, 1, 0, 1)) == whole(2));
  try {
    count_roots_in_rectangle(Z - constant(G(1, 1)), Rectangle(0, 1, 0, 1));
    FAIL("expected a vertex root error");
  } catch (const VertexRootError& e) {
    CHECK(e.vertex() == G(1, 1));
  }
}

TEST_CASE("open segment root counts") {
  const ComplexPoly f = (Z - constant(G(Rational(1, 3)))) * (Z - constant(G(Rational(2, 3)))) *
                        (Z - constant(G(1))) * (Z * Z + constant(G(1)));
  CHECK(roots_on_open_segment(analyze_segment(f, G(0), G(1))) == 2);
  CHECK(roots_on_open_segment(analyze_segment(f, G(0), G(2))) == 3);
  CHECK(roots_on_open_segment(analyze_segment(f, G(0, -2), G(0, 2))) == 2);
  CHECK(roots_on_open_segment(analyze_segment(f, G(2), G(3))) == 0);
}

TEST_CASE("polygonal and piecewise loops") {
  const std::vector<G> square{G(1, 1), G(-1, 1), G(-1, -1), G(1, -1)};
  CHECK(loop_index(polygonal_loop(square)) == whole(1));
  const std::vector<G> reversed(square.rbegin(), square.rend());
  CHECK(loop_index(polygonal_loop(reversed)) == whole(-1));
  const std::vector<G> right_half{G(1), G(2, 1), G(3), G(2, -1)};
  CHECK(loop_index(polygonal_loop(right_half)) == whole(0));

  // pieces 1 + t (X - k) style, closed, with image in re > 0
  PolyLoop loop;
  loop.breakpoints = {Rational(0), Rational(1), Rational(2)};
  loop.pieces = {ComplexPoly{G(1), G(Rational(0), Rational(1))},
                 ComplexPoly{G(Rational(1), Rational(2)), G(Rational(0), Rational(-1))}};
  CHECK(loop_index(loop) == whole(0));

  PolyLoop open = loop;
  open.pieces[1] = ComplexPoly{G(1, 3), G(Rational(0), Rational(-1))};
  CHECK_THROWS_AS(loop_index(open), PreconditionError);
  PolyLoop torn = loop;
  torn.breakpoints = {Rational(0), Rational(2), Rational(1)};
  CHECK_THROWS_AS(loop_index(torn), PreconditionError);
}

TEST_CASE("cauchy radius") {
  CHECK(cauchy_radius(power(Z, 4)) == Rational(1));
  CHECK(cauchy_radius(Z * Z - constant(G(2))) == Rational(3));
  CHECK(cauchy_radius(Z * constant(G(3, 4)) + constant(G(1))) == Rational(5, 4));
  CHECK_THROWS_AS(cauchy_radius(ComplexPoly()), PreconditionError);
  testing::Gen gen(41);
  for (int n = 0; n < 50; ++n) {
    std::vector<G> roots;
    for (int k = 0; k < 4; ++k) roots.push_back(gen.gaussian(9, 4));
    const Rational rho = cauchy_radius(testing::from_roots(roots, gen.gaussian(3, 2) + G(1)));
    for (const auto& z : roots) CHECK(z.norm() < rho * rho);
  }
}

TEST_CASE("global index equals the degree") {
  CHECK(global_index_check(Z * Z * Z + Z + constant(G(1))) == whole(3));
  CHECK(global_index_check(constant(G(7))) == whole(0));
  CHECK(global_index_check(Z * Z + constant(G(1))) == whole(2));
  testing::Gen gen(42);
  for (int n = 0; n < 40; ++n) {
    const int deg = static_cast<int>(gen.integer(1, 6));
    CHECK(global_index_check(gen.complex_poly(deg)) == whole(deg));
  }
}

TEST_CASE("known-root oracle, bisection and product formula") {
  testing::Gen gen(43);
  int checked = 0;
  while (checked < 60) {
    std::vector<G> roots;
    const int deg = static_cast<int>(gen.integer(1, 4));
    for (int k = 0; k < deg; ++k) roots.push_back(gen.gaussian(8, 2));
    const ComplexPoly f = testing::from_roots(roots, gen.gaussian(3, 2) + G(0, 1));
    const Rectangle r = gen.rectangle(4, 2);
    if (!vertices_clear(f, r)) continue;
    ++checked;
    CHECK(count_roots_in_rectangle(f, r) == testing::weighted_root_count(roots, r));

    const Rational xm = (r.x0() + r.x1()) * Rational(1, 2);
    const Rectangle left(r.x0(), xm, r.y0(), r.y1());
    const Rectangle right(xm, r.x1(), r.y0(), r.y1());
    if (vertices_clear(f, left) && vertices_clear(f, right)) {
      CHECK(rectangle_index(f, r) == rectangle_index(f, left) + rectangle_index(f, right));
    }

    std::vector<G> more{gen.gaussian(8, 2), gen.gaussian(8, 2)};
    const ComplexPoly g = testing::from_roots(more);
    if (vertices_clear(g, r)) {
      CHECK(rectangle_index(f * g, r) == rectangle_index(f, r) + rectangle_index(g, r));
    }
  }
}
