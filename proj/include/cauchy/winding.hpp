#pragma once

// The algebraic winding number of polynomial images of segments, rectangle
// boundaries and piecewise polynomial loops, and complex root counting.

#include <array>
#include <vector>

#include "cauchy/cauchy_index.hpp"
#include "cauchy/index_value.hpp"
#include "cauchy/polynomial.hpp"

namespace cauchy {

/// Closed rectangle [x0, x1] x [y0, y1] with x0 < x1 and y0 < y1.
class Rectangle {
 public:
  Rectangle(Rational x0, Rational x1, Rational y0, Rational y1);

  /// The square [-r, r]^2.
  static Rectangle centered_square(const Rational& r);

  const Rational& x0() const { return x0_; }
  const Rational& x1() const { return x1_; }
  const Rational& y0() const { return y0_; }
  const Rational& y1() const { return y1_; }

  Rational width() const { return x1_ - x0_; }
  Rational height() const { return y1_ - y0_; }
  Rational diameter_squared() const { return width() * width() + height() * height(); }
  GaussianRational center() const;

  /// a = (x0, y0), b = (x1, y0), c = (x1, y1), d = (x0, y1), counterclockwise.
  std::array<GaussianRational, 4> vertices() const;

  /// Closed containment.
  bool contains(const Rational& x, const Rational& y) const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  Rational x0_, x1_, y0_, y1_;
};

/// F vanishes at a vertex of the rectangle.
class VertexRootError : public PreconditionError {
 public:
  explicit VertexRootError(GaussianRational vertex);
  const GaussianRational& vertex() const { return vertex_; }

 private:
  GaussianRational vertex_;
};

/// Image of the segment [a, b] under F, with its winding contribution and the
/// common zeros of its real and imaginary parts.
struct SegmentAnalysis {
  QuarterInt index;
  /// Monic gcd(re F^, im F^) in the segment parameter t in [0, 1].
  RealPoly common_divisor;
};

SegmentAnalysis analyze_segment(const ComplexPoly& f, const GaussianRational& a,
                                const GaussianRational& b);

/// (1/2) Ind_0^1(re F^ / im F^) with F^ = F((b - a) X + a). Throws for a = b.
QuarterInt segment_index(const ComplexPoly& f, const GaussianRational& a, const GaussianRational& b);

/// Sum of the four segment indices along a -> b -> c -> d -> a.
QuarterInt rectangle_index(const ComplexPoly& f, const Rectangle& rect);

/// Number of distinct roots of f on the open segment ]a, b[.
int roots_on_open_segment(const SegmentAnalysis& segment);

/// Continuous piecewise polynomial path t -> G_k(t) on [t_{k-1}, t_k].
struct PolyLoop {
  std::vector<Rational> breakpoints;
  std::vector<ComplexPoly> pieces;
};

/// Polygonal loop visiting the given points in order and returning to the first.
PolyLoop polygonal_loop(const std::vector<GaussianRational>& points);

/// Sum of the piece indices. Throws PreconditionError for malformed,
/// discontinuous or non-closed loops.
QuarterInt loop_index(const PolyLoop& loop);

/// Roots in the rectangle, interior ones counted fully and edge ones by half,
/// both with multiplicity. Throws VertexRootError when f vanishes at a vertex.
QuarterInt count_roots_in_rectangle(const ComplexPoly& f, const Rectangle& rect);

/// Rational bound rho >= 1 + max_{k<n}|c_k| / |c_n|; every root has |z| < rho.
Rational cauchy_radius(const ComplexPoly& f);

/// Index over [-rho, rho]^2 with rho = cauchy_radius(f); always deg f.
QuarterInt global_index_check(const ComplexPoly& f);

}  // namespace cauchy
