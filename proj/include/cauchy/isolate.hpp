#pragma once

// Global root isolation by bisection of 0-, 1- and 2-cells, with exact
// deflation of roots hit by bisection points, and the Newton cross-over.

#include <optional>
#include <span>
#include <vector>

#include "cauchy/index_value.hpp"
#include "cauchy/polynomial.hpp"
#include "cauchy/winding.hpp"

namespace cauchy {

/// A point (dim 0), an open axis-parallel segment (dim 1) or an open
/// rectangle (dim 2). Segments are degenerate extents: x0 == x1 for vertical
/// ones, y0 == y1 for horizontal ones.
struct Cell {
  int dim = 2;
  Rational x0, x1, y0, y1;
  QuarterInt root_weight;

  GaussianRational center() const;
  Rational diameter_squared() const;
  /// Rational radius bound: every point of the cell is within it of center().
  Rational radius_bound() const;
  /// Membership of an exact point in the (open) cell.
  bool contains(const Rational& x, const Rational& y) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Lexicographic order on (x0, y0, x1, y1, dim).
bool cell_less(const Cell& a, const Cell& b);

struct DeflatedRoot {
  GaussianRational value;
  /// Multiplicity as a root of the input polynomial.
  unsigned multiplicity = 1;
};

struct IsolationState {
  int generation = 0;
  std::vector<Cell> cells;
  Rational initial_radius;
  std::vector<DeflatedRoot> deflated_roots;
  /// Input polynomial, its square-free part, and the square-free part with
  /// every deflated root divided out (the polynomial the cells count).
  ComplexPoly input;
  ComplexPoly square_free;
  ComplexPoly working;
};

/// L_0 = { ]-r, r[^2 } for the square-free part of f. Requires deg f >= 1.
IsolationState initial_isolation_state(const ComplexPoly& f);

/// Advances one generation: deflates roots at new bisection points, bisects
/// every cell and keeps the pieces that contain roots. `jobs` bounds the
/// number of worker threads; output is identical for every value.
void refine_generation(IsolationState& state, unsigned jobs = 1);

/// Refines until every cell has diameter <= target_diameter.
IsolationState isolate_roots(const ComplexPoly& f, const Rational& target_diameter,
                             unsigned jobs = 1);

struct Deflation {
  ComplexPoly quotient;
  unsigned multiplicity = 0;
};

/// Divides f by (Z - z0)^m with m maximal. Throws PreconditionError if f(z0) != 0.
Deflation deflate_vertex_root(const ComplexPoly& f, const GaussianRational& z0);

/// Disk B(center, radius) believed to contain exactly one root.
struct ApproximateRoot {
  GaussianRational center;
  Rational radius;
};

/// Centers and radius bounds of the cells of a state.
std::vector<ApproximateRoot> approximate_roots(const IsolationState& state);

/// True iff 3 n radius_k <= lower|u_k - u_j| for all j != k.
bool newton_switch_ready(std::span<const ApproximateRoot> approx);

/// z - F(z)/F'(z), optionally snapped to the grid 2^-rounding_bits.
/// Throws PreconditionError if F'(z) = 0.
GaussianRational newton_step(const ComplexPoly& f, const GaussianRational& z,
                             std::optional<unsigned> rounding_bits = std::nullopt);

/// Conservative test of Smale's alpha-style hypothesis at u0 for F(Z + u0).
/// Throws PreconditionError if F'(u0) = 0.
bool smale_check(const ComplexPoly& f, const GaussianRational& u0);

/// ceil(log2(1 / target)) + 2, the snapping precision used for Newton refinement.
unsigned newton_rounding_bits(const Rational& target_diameter);

}  // namespace cauchy
