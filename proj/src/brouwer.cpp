#include "cauchy/brouwer.hpp"

#include <algorithm>
#include <array>
#include <span>

#include "cauchy/cauchy_index.hpp"

namespace cauchy {

BivariatePoly::BivariatePoly(std::map<Exponents, Rational> terms) : terms_(std::move(terms)) {
  prune();
}

BivariatePoly BivariatePoly::constant(const Rational& c) { return BivariatePoly(std::map<Exponents, Rational>{{{0, 0}, c}}); }
BivariatePoly BivariatePoly::x() { return BivariatePoly(std::map<Exponents, Rational>{{{1, 0}, Rational(1)}}); }
BivariatePoly BivariatePoly::y() { return BivariatePoly(std::map<Exponents, Rational>{{{0, 1}, Rational(1)}}); }

void BivariatePoly::prune() {
  std::erase_if(terms_, [](const auto& term) { return term.second.is_zero(); });
}

unsigned BivariatePoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

Rational BivariatePoly::max_coefficient() const {
  Rational m(0);
  for (const auto& [e, c] : terms_) m = max(m, c.abs());
  return m;
}

Rational BivariatePoly::operator()(const Rational& x, const Rational& y) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (unsigned k = 0; k < e.first; ++k) term *= x;
    for (unsigned k = 0; k < e.second; ++k) term *= y;
    sum += term;
  }
  return sum;
}

RealPoly BivariatePoly::restrict_to_segment(const GaussianRational& a,
                                            const GaussianRational& b) const {
  const RealPoly x_of_t({a.re(), b.re() - a.re()});
  const RealPoly y_of_t({a.im(), b.im() - a.im()});
  RealPoly out;
  for (const auto& [e, c] : terms_) out += power(x_of_t, e.first) * power(y_of_t, e.second) * c;
  return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [e, c] : other.terms_) terms_[e] += c;
  prune();
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [e, c] : other.terms_) terms_[e] -= c;
  prune();
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  std::map<BivariatePoly::Exponents, Rational> out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  return BivariatePoly(std::move(out));
}

namespace {

struct Displacement {
  BivariatePoly dx;  // X - P
  BivariatePoly dy;  // Y - Q
};

Displacement displacement(const PlaneMap& f) {
  return {BivariatePoly::x() - f.p, BivariatePoly::y() - f.q};
}

GaussianRational along(const GaussianRational& a, const GaussianRational& b, const Rational& t) {
  return a + (b - a) * GaussianRational(t);
}

QuarterInt edge_index(const Displacement& g, const GaussianRational& a, const GaussianRational& b) {
  const RealPoly u = g.dx.restrict_to_segment(a, b);
  const RealPoly v = g.dy.restrict_to_segment(a, b);
  return half_of(cauchy_index(u, v, Rational(0), Rational(1)));
}

QuarterInt boundary_index(const Displacement& g, const Rectangle& rect) {
  const auto v = rect.vertices();
  QuarterInt total;
  for (std::size_t k = 0; k < 4; ++k) total += edge_index(g, v[k], v[(k + 1) % 4]);
  return total;
}

FixedPointResult exact(const GaussianRational& z, int generations) {
  FixedPointResult r;
  r.kind = FixedPointResult::Kind::exact_point;
  r.point = z;
  r.generations = generations;
  return r;
}

// Looks for a zero of id - f on the closed segment [a, b]. Rational zeros are
// returned exactly; an irrational one is bracketed to length <= target.
std::optional<FixedPointResult> boundary_fixed_point(const Displacement& g,
                                                     const GaussianRational& a,
                                                     const GaussianRational& b,
                                                     const Rational& target, int generations) {
  const RealPoly u = g.dx.restrict_to_segment(a, b);
  const RealPoly v = g.dy.restrict_to_segment(a, b);
  if (u.is_zero() && v.is_zero()) return exact(a, generations);
  const RealPoly h = u.is_zero() ? monic(v) : (v.is_zero() ? monic(u) : gcd(u, v));
  if (h.degree() < 1) return std::nullopt;
  Rational lo(0);
  Rational hi(1);
  if (h(lo).is_zero()) return exact(a, generations);
  if (h(hi).is_zero()) return exact(b, generations);
  if (count_real_roots(h, lo, hi).is_zero()) return std::nullopt;

  // A rational root p/q of the primitive integer polynomial has q | lc, so an
  // interval shorter than 1/lc^2 holds at most one candidate: the simplest one.
  const Rational lead = primitive_part(h).leading().abs();
  const Rational separation = (lead * lead).inverse();
  const Rational length = modulus_bounds(b - a).upper;
  bool tried_rational = false;
  while (true) {
    const Rational mid = (lo + hi) * Rational(1, 2);
    if (h(mid).is_zero()) return exact(along(a, b, mid), generations);
    if (count_real_roots(h, lo, mid).is_zero()) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (!tried_rational && hi - lo < separation) {
      tried_rational = true;
      const Rational candidate = simplest_between(lo, hi);
      if (h(candidate).is_zero()) return exact(along(a, b, candidate), generations);
    }
    if (tried_rational && (hi - lo) * length <= target) {
      FixedPointResult r;
      r.kind = FixedPointResult::Kind::boundary_segment;
      r.segment_from = along(a, b, lo);
      r.segment_to = along(a, b, hi);
      r.generations = generations;
      return r;
    }
  }
}

std::optional<FixedPointResult> scan_edges(const Displacement& g,
                                           std::span<const std::pair<GaussianRational, GaussianRational>> edges,
                                           const Rational& target, int generations) {
  for (const auto& [a, b] : edges) {
    if (auto hit = boundary_fixed_point(g, a, b, target, generations)) return hit;
  }
  return std::nullopt;
}

}  // namespace

QuarterInt displacement_index(const PlaneMap& f, const Rectangle& rect) {
  return boundary_index(displacement(f), rect);
}

FixedPointResult fixed_point_search(const PlaneMap& f, const Rectangle& rect,
                                    const Rational& target_diameter) {
  if (target_diameter.sign() <= 0) throw PreconditionError("target diameter must be positive");
  const Displacement g = displacement(f);
  const Rational target_sq = target_diameter * target_diameter;

  Rectangle current = rect;
  int generation = 0;
  {
    const auto v = current.vertices();
    const std::array<std::pair<GaussianRational, GaussianRational>, 4> edges{
        {{v[0], v[1]}, {v[1], v[2]}, {v[3], v[2]}, {v[0], v[3]}}};
    if (auto hit = scan_edges(g, edges, target_diameter, generation)) return *hit;
  }
  QuarterInt index = boundary_index(g, current);
  if (index.is_zero()) {
    throw PreconditionError(
        "index of id - f vanishes on the initial rectangle: f is not a self-map of it");
  }

  while (current.diameter_squared() > target_sq) {
    ++generation;
    const Rational xm = (current.x0() + current.x1()) * Rational(1, 2);
    const Rational ym = (current.y0() + current.y1()) * Rational(1, 2);
    const GaussianRational center(xm, ym);
    const std::array<std::pair<GaussianRational, GaussianRational>, 4> cross{
        {{{current.x0(), ym}, center},
         {center, {current.x1(), ym}},
         {{xm, current.y0()}, center},
         {center, {xm, current.y1()}}}};
    if (auto hit = scan_edges(g, cross, target_diameter, generation)) return *hit;

    const std::array<Rectangle, 4> quadrants{
        Rectangle(current.x0(), xm, current.y0(), ym), Rectangle(xm, current.x1(), current.y0(), ym),
        Rectangle(xm, current.x1(), ym, current.y1()), Rectangle(current.x0(), xm, ym, current.y1())};
    bool advanced = false;
    for (const Rectangle& q : quadrants) {
      const QuarterInt qi = boundary_index(g, q);
      if (!qi.is_zero()) {
        current = q;
        index = qi;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InvariantError("bisection lost the nonzero index of id - f");
  }

  FixedPointResult r;
  r.kind = FixedPointResult::Kind::cell;
  r.rectangle = current;
  r.generations = generation;
  r.index = index;
  return r;
}

}  // namespace cauchy
