#include "cauchy/winding.hpp"

namespace cauchy {

Rectangle::Rectangle(Rational x0, Rational x1, Rational y0, Rational y1)
    : x0_(std::move(x0)), x1_(std::move(x1)), y0_(std::move(y0)), y1_(std::move(y1)) {
  if (!(x0_ < x1_) || !(y0_ < y1_)) {
    throw PreconditionError("rectangle requires x0 < x1 and y0 < y1");
  }
}

Rectangle Rectangle::centered_square(const Rational& r) { return {-r, r, -r, r}; }

GaussianRational Rectangle::center() const {
  const Rational half(1, 2);
  return {(x0_ + x1_) * half, (y0_ + y1_) * half};
}

std::array<GaussianRational, 4> Rectangle::vertices() const {
  return {GaussianRational(x0_, y0_), GaussianRational(x1_, y0_), GaussianRational(x1_, y1_),
          GaussianRational(x0_, y1_)};
}

bool Rectangle::contains(const Rational& x, const Rational& y) const {
  return x0_ <= x && x <= x1_ && y0_ <= y && y <= y1_;
}

VertexRootError::VertexRootError(GaussianRational vertex)
    : PreconditionError("polynomial vanishes at rectangle vertex " + vertex.to_string()),
      vertex_(std::move(vertex)) {}

SegmentAnalysis analyze_segment(const ComplexPoly& f, const GaussianRational& a,
                                const GaussianRational& b) {
  if (a == b) throw PreconditionError("segment_index requires distinct endpoints");
  const ComplexPoly restricted = compose_affine(f, b - a, a);
  const RealPoly re = real_part(restricted);
  const RealPoly im = imag_part(restricted);
  if (re.is_zero() || im.is_zero()) {
    RealPoly divisor;
    if (!re.is_zero()) divisor = monic(re);
    if (!im.is_zero()) divisor = monic(im);
    return {QuarterInt(), std::move(divisor)};
  }
  const SturmChain chain = sturm_chain(re, im);
  return {half_of(sign_var_diff(chain, Rational(0), Rational(1))), chain.divisor()};
}

QuarterInt segment_index(const ComplexPoly& f, const GaussianRational& a,
                         const GaussianRational& b) {
  return analyze_segment(f, a, b).index;
}

QuarterInt rectangle_index(const ComplexPoly& f, const Rectangle& rect) {
  if (f.is_zero()) throw PreconditionError("rectangle_index of the zero polynomial");
  const auto v = rect.vertices();
  QuarterInt total;
  for (std::size_t k = 0; k < 4; ++k) total += segment_index(f, v[k], v[(k + 1) % 4]);
  return total;
}

int roots_on_open_segment(const SegmentAnalysis& segment) {
  const RealPoly& g = segment.common_divisor;
  if (g.is_zero()) throw PreconditionError("polynomial vanishes on the whole segment");
  if (g.degree() == 0) return 0;
  const Rational zero(0);
  const Rational one(1);
  HalfInt closed = count_real_roots(g, zero, one);
  // Remove the half weights of endpoint roots.
  if (g(zero).is_zero()) closed -= HalfInt::from_units(1);
  if (g(one).is_zero()) closed -= HalfInt::from_units(1);
  if (!closed.is_integer()) throw InvariantError("fractional open-segment root count");
  return static_cast<int>(closed.integer_part());
}

PolyLoop polygonal_loop(const std::vector<GaussianRational>& points) {
  if (points.size() < 2) throw PreconditionError("a polygonal loop needs at least two points");
  PolyLoop loop;
  const std::size_t n = points.size();
  for (std::size_t k = 0; k <= n; ++k) loop.breakpoints.emplace_back(static_cast<long>(k));
  for (std::size_t k = 0; k < n; ++k) {
    const GaussianRational& from = points[k];
    const GaussianRational& to = points[(k + 1) % n];
    // from + (t - k)(to - from)
    const GaussianRational slope = to - from;
    loop.pieces.push_back(ComplexPoly({from - slope * GaussianRational(static_cast<long>(k)), slope}));
  }
  return loop;
}

QuarterInt loop_index(const PolyLoop& loop) {
  const auto& t = loop.breakpoints;
  const auto& g = loop.pieces;
  if (g.empty() || t.size() != g.size() + 1) {
    throw PreconditionError("loop needs n pieces and n + 1 breakpoints");
  }
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!(t[k - 1] < t[k])) throw PreconditionError("loop breakpoints must increase");
  }
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    if (g[k](GaussianRational(t[k + 1])) != g[k + 1](GaussianRational(t[k + 1]))) {
      throw PreconditionError("loop is discontinuous at breakpoint " + t[k + 1].to_string());
    }
  }
  if (g.back()(GaussianRational(t.back())) != g.front()(GaussianRational(t.front()))) {
    throw PreconditionError("loop is not closed");
  }
  QuarterInt total;
  for (std::size_t k = 0; k < g.size(); ++k) {
    total += segment_index(g[k], GaussianRational(t[k]), GaussianRational(t[k + 1]));
  }
  return total;
}

QuarterInt count_roots_in_rectangle(const ComplexPoly& f, const Rectangle& rect) {
  if (f.is_zero()) throw PreconditionError("count_roots_in_rectangle of the zero polynomial");
  for (const auto& v : rect.vertices()) {
    if (f(v).is_zero()) throw VertexRootError(v);
  }
  return rectangle_index(f, rect);
}

Rational cauchy_radius(const ComplexPoly& f) {
  if (f.is_zero()) throw PreconditionError("cauchy_radius of the zero polynomial");
  Rational m(0);
  for (std::size_t k = 0; k + 1 < f.size(); ++k) m = max(m, modulus_bounds(f.coeffs()[k]).upper);
  return Rational(1) + m / modulus_bounds(f.leading()).lower;
}

QuarterInt global_index_check(const ComplexPoly& f) {
  return rectangle_index(f, Rectangle::centered_square(cauchy_radius(f)));
}

}  // namespace cauchy
