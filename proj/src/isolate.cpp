#include "cauchy/isolate.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "parallel.hpp"

namespace cauchy {

namespace {

const Rational kHalf(1, 2);

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) * kHalf; }

int open_count(const SegmentAnalysis& s) { return roots_on_open_segment(s); }

Cell make_cell(int dim, Rational x0, Rational x1, Rational y0, Rational y1, int weight) {
  return {dim, std::move(x0), std::move(x1), std::move(y0), std::move(y1),
          QuarterInt::from_integer(weight)};
}

// Four open quadrants, four open half-segments of the cross and the center.
// The center was deflated beforehand if it was a root, so it is never kept.
std::vector<Cell> bisect_box(const Cell& cell, const ComplexPoly& w) {
  const std::array<Rational, 3> xs{cell.x0, midpoint(cell.x0, cell.x1), cell.x1};
  const std::array<Rational, 3> ys{cell.y0, midpoint(cell.y0, cell.y1), cell.y1};

  // horizontal[row][col]: y = ys[row], x from xs[col] to xs[col + 1]
  // vertical[col][row]:   x = xs[col], y from ys[row] to ys[row + 1]
  std::array<std::array<SegmentAnalysis, 2>, 3> horizontal;
  std::array<std::array<SegmentAnalysis, 2>, 3> vertical;
  std::array<std::array<int, 2>, 3> h_roots{};
  std::array<std::array<int, 2>, 3> v_roots{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      horizontal[i][j] = analyze_segment(w, {xs[j], ys[i]}, {xs[j + 1], ys[i]});
      h_roots[i][j] = open_count(horizontal[i][j]);
      vertical[i][j] = analyze_segment(w, {xs[i], ys[j]}, {xs[i], ys[j + 1]});
      v_roots[i][j] = open_count(vertical[i][j]);
    }
  }

  std::vector<Cell> out;
  for (std::size_t row = 0; row < 2; ++row) {
    for (std::size_t col = 0; col < 2; ++col) {
      const QuarterInt index = horizontal[row][col].index + vertical[col + 1][row].index -
                               horizontal[row + 1][col].index - vertical[col][row].index;
      const int edge_roots =
          h_roots[row][col] + h_roots[row + 1][col] + v_roots[col][row] + v_roots[col + 1][row];
      const QuarterInt interior = index - QuarterInt::from_units(2 * edge_roots);
      if (!interior.is_integer() || interior < QuarterInt()) {
        throw InvariantError("inconsistent root count in rectangle cell: " + interior.to_string());
      }
      if (!interior.is_zero()) {
        out.push_back({2, xs[col], xs[col + 1], ys[row], ys[row + 1], interior});
      }
    }
  }
  for (std::size_t j = 0; j < 2; ++j) {
    if (h_roots[1][j] > 0) out.push_back(make_cell(1, xs[j], xs[j + 1], ys[1], ys[1], h_roots[1][j]));
    if (v_roots[1][j] > 0) out.push_back(make_cell(1, xs[1], xs[1], ys[j], ys[j + 1], v_roots[1][j]));
  }
  return out;
}

std::vector<Cell> bisect_segment(const Cell& cell, const ComplexPoly& w) {
  std::vector<Cell> out;
  if (cell.x0 == cell.x1) {
    const Rational ym = midpoint(cell.y0, cell.y1);
    const int lower = open_count(analyze_segment(w, {cell.x0, cell.y0}, {cell.x0, ym}));
    const int upper = open_count(analyze_segment(w, {cell.x0, ym}, {cell.x0, cell.y1}));
    if (lower > 0) out.push_back(make_cell(1, cell.x0, cell.x0, cell.y0, ym, lower));
    if (upper > 0) out.push_back(make_cell(1, cell.x0, cell.x0, ym, cell.y1, upper));
  } else {
    const Rational xm = midpoint(cell.x0, cell.x1);
    const int left = open_count(analyze_segment(w, {cell.x0, cell.y0}, {xm, cell.y0}));
    const int right = open_count(analyze_segment(w, {xm, cell.y0}, {cell.x1, cell.y0}));
    if (left > 0) out.push_back(make_cell(1, cell.x0, xm, cell.y0, cell.y0, left));
    if (right > 0) out.push_back(make_cell(1, xm, cell.x1, cell.y0, cell.y0, right));
  }
  return out;
}

std::vector<GaussianRational> bisection_points(const Cell& cell) {
  if (cell.dim == 0) return {};
  const Rational xm = midpoint(cell.x0, cell.x1);
  const Rational ym = midpoint(cell.y0, cell.y1);
  if (cell.dim == 1) return {GaussianRational(xm, ym)};
  return {{xm, ym}, {xm, cell.y0}, {cell.x1, ym}, {xm, cell.y1}, {cell.x0, ym}};
}

}  // namespace

GaussianRational Cell::center() const { return {midpoint(x0, x1), midpoint(y0, y1)}; }

Rational Cell::diameter_squared() const {
  const Rational w = x1 - x0;
  const Rational h = y1 - y0;
  return w * w + h * h;
}

Rational Cell::radius_bound() const {
  // sqrt(M^2 + m^2) <= M + m^2 / (2M) for M >= m >= 0
  const Rational w = x1 - x0;
  const Rational h = y1 - y0;
  const Rational big = max(w, h);
  const Rational small = min(w, h);
  if (big.is_zero()) return Rational(0);
  return (big + small * small / (Rational(2) * big)) * kHalf;
}

bool Cell::contains(const Rational& x, const Rational& y) const {
  const bool in_x = x0 == x1 ? x == x0 : (x0 < x && x < x1);
  const bool in_y = y0 == y1 ? y == y0 : (y0 < y && y < y1);
  return in_x && in_y;
}

bool cell_less(const Cell& a, const Cell& b) {
  return std::tie(a.x0, a.y0, a.x1, a.y1, a.dim) < std::tie(b.x0, b.y0, b.x1, b.y1, b.dim);
}

IsolationState initial_isolation_state(const ComplexPoly& f) {
  if (f.degree() < 1) throw PreconditionError("root isolation needs a polynomial of degree >= 1");
  IsolationState state;
  state.input = f;
  state.square_free = square_free_part(f);
  state.working = state.square_free;
  state.initial_radius = cauchy_radius(state.square_free);
  const Rational& r = state.initial_radius;
  state.cells.push_back(make_cell(2, -r, r, -r, r, state.square_free.degree()));
  return state;
}

void refine_generation(IsolationState& state, unsigned jobs) {
  for (const Cell& cell : state.cells) {
    for (const GaussianRational& p : bisection_points(cell)) {
      if (state.working.degree() < 1 || !state.working(p).is_zero()) continue;
      state.working = deflate_vertex_root(state.working, p).quotient;
      state.deflated_roots.push_back({p, divide_out_root(state.input, p).second});
    }
  }

  std::vector<std::vector<Cell>> children(state.cells.size());
  const ComplexPoly& w = state.working;
  detail::parallel_for(state.cells.size(), jobs, [&](std::size_t i) {
    const Cell& cell = state.cells[i];
    if (w.degree() < 1) return;
    switch (cell.dim) {
      case 0: children[i] = {cell}; break;
      case 1: children[i] = bisect_segment(cell, w); break;
      default: children[i] = bisect_box(cell, w); break;
    }
  });

  std::vector<Cell> next;
  for (auto& group : children) {
    for (auto& c : group) next.push_back(std::move(c));
  }
  std::sort(next.begin(), next.end(), cell_less);
  state.cells = std::move(next);
  ++state.generation;
}

IsolationState isolate_roots(const ComplexPoly& f, const Rational& target_diameter,
                             unsigned jobs) {
  if (target_diameter.sign() <= 0) throw PreconditionError("target diameter must be positive");
  IsolationState state = initial_isolation_state(f);
  const Rational target_sq = target_diameter * target_diameter;
  auto done = [&] {
    return std::all_of(state.cells.begin(), state.cells.end(),
                       [&](const Cell& c) { return c.diameter_squared() <= target_sq; });
  };
  while (!done()) refine_generation(state, jobs);
  return state;
}

Deflation deflate_vertex_root(const ComplexPoly& f, const GaussianRational& z0) {
  if (f.is_zero() || !f(z0).is_zero()) {
    throw PreconditionError("deflate_vertex_root: " + z0.to_string() + " is not a root");
  }
  auto [quotient, m] = divide_out_root(f, z0);
  return {std::move(quotient), m};
}

std::vector<ApproximateRoot> approximate_roots(const IsolationState& state) {
  std::vector<ApproximateRoot> out;
  out.reserve(state.cells.size());
  for (const Cell& c : state.cells) out.push_back({c.center(), c.radius_bound()});
  return out;
}

bool newton_switch_ready(std::span<const ApproximateRoot> approx) {
  const Rational three_n(3 * static_cast<long>(approx.size()));
  for (std::size_t k = 0; k < approx.size(); ++k) {
    for (std::size_t j = 0; j < approx.size(); ++j) {
      if (j == k) continue;
      const Rational separation = modulus_bounds(approx[k].center - approx[j].center).lower;
      if (three_n * approx[k].radius > separation) return false;
    }
  }
  return true;
}

GaussianRational newton_step(const ComplexPoly& f, const GaussianRational& z,
                             std::optional<unsigned> rounding_bits) {
  const GaussianRational slope = f.derivative()(z);
  if (slope.is_zero()) throw PreconditionError("newton_step: F'(z) = 0 at " + z.to_string());
  GaussianRational next = z - f(z) / slope;
  if (rounding_bits) {
    next = {round_dyadic(next.re(), *rounding_bits), round_dyadic(next.im(), *rounding_bits)};
  }
  return next;
}

bool smale_check(const ComplexPoly& f, const GaussianRational& u0) {
  const GaussianRational slope = f.derivative()(u0);
  if (slope.is_zero()) throw PreconditionError("smale_check: F'(u0) = 0 at " + u0.to_string());
  const Rational eta = modulus_bounds(f(u0) / slope).upper;
  if (eta.is_zero()) return true;
  const ComplexPoly shifted = compose_affine(f, GaussianRational(1), u0);
  const Rational c1_lower = modulus_bounds(shifted.coefficient(1)).lower;
  const Rational eight_eta = Rational(8) * eta;
  Rational growth = eight_eta;  // (8 eta)^(k-1)
  for (std::size_t k = 2; k < shifted.size(); ++k) {
    // |c_k| <= (8 eta)^(1-k) |c_1|  <=>  |c_k| (8 eta)^(k-1) <= |c_1|
    if (modulus_bounds(shifted.coeffs()[k]).upper * growth > c1_lower) return false;
    growth *= eight_eta;
  }
  return true;
}

unsigned newton_rounding_bits(const Rational& target_diameter) {
  if (target_diameter.sign() <= 0) throw PreconditionError("target diameter must be positive");
  unsigned k = 0;
  while (Rational::power_of_two(-static_cast<long>(k)) > target_diameter) ++k;
  return k + 2;
}

}  // namespace cauchy
