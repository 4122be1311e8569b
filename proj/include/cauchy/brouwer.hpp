#pragma once

// Locating fixed points of polynomial self-maps of a rectangle by bisection
// on the winding number of id - f.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cauchy/index_value.hpp"
#include "cauchy/polynomial.hpp"
#include "cauchy/winding.hpp"

namespace cauchy {

/// Polynomial in X, Y with rational coefficients; key (i, j) is X^i Y^j.
class BivariatePoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BivariatePoly() = default;
  explicit BivariatePoly(std::map<Exponents, Rational> terms);

  static BivariatePoly constant(const Rational& c);
  static BivariatePoly x();
  static BivariatePoly y();

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  /// Largest |coefficient|, 0 for the zero polynomial.
  Rational max_coefficient() const;

  Rational operator()(const Rational& x, const Rational& y) const;

  /// t -> P(a + t (b - a)), the restriction to the segment from a to b.
  RealPoly restrict_to_segment(const GaussianRational& a, const GaussianRational& b) const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void prune();

  std::map<Exponents, Rational> terms_;
};

/// f(x, y) = (P(x, y), Q(x, y)).
struct PlaneMap {
  BivariatePoly p;
  BivariatePoly q;
};

struct FixedPointResult {
  enum class Kind {
    exact_point,       // f(point) == point exactly
    cell,              // rectangle with nonzero index of id - f
    boundary_segment,  // closed segment on a cell boundary holding an irrational fixed point
  };

  Kind kind = Kind::cell;
  GaussianRational point;                     // exact_point
  std::optional<Rectangle> rectangle;         // cell
  GaussianRational segment_from, segment_to;  // boundary_segment
  int generations = 0;
  QuarterInt index;  // index of id - f along the returned cell
};

/// Winding number of id - f along the boundary of rect.
QuarterInt displacement_index(const PlaneMap& f, const Rectangle& rect);

/// Bisects rect towards a fixed point of f until the cell diameter is at most
/// target_diameter. Throws PreconditionError when the index of id - f over the
/// current cell vanishes without a boundary fixed point (f is no self-map).
FixedPointResult fixed_point_search(const PlaneMap& f, const Rectangle& rect,
                                    const Rational& target_diameter);

}  // namespace cauchy
