#pragma once

// Routh index and the Routh-Hurwitz count of roots per open half-plane.

#include "cauchy/index_value.hpp"
#include "cauchy/polynomial.hpp"

namespace cauchy {

struct HalfPlaneCount {
  int positive = 0;        // p: roots with re z > 0
  int negative = 0;        // q: roots with re z < 0
  int imaginary_axis = 0;  // roots with re z = 0

  friend bool operator==(const HalfPlaneCount&, const HalfPlaneCount&) = default;
};

/// Routh(F) = p - q, from Cauchy indices of re F(iY) / im F(iY).
HalfInt routh_index(const ComplexPoly& f);

/// Root counts with multiplicity; the three fields sum to deg F (>= 1).
HalfPlaneCount half_plane_count(const ComplexPoly& f);

/// All roots in the open left half-plane.
bool is_hurwitz_stable(const ComplexPoly& f);

/// Number of roots of F(iY) on the real line counted with multiplicity,
/// i.e. roots of F on the imaginary axis.
int imaginary_axis_roots(const ComplexPoly& f);

// Real-coefficient formulations, both returning q - p for P of degree n >= 1.
/// -Ind(re P(iY) / im P(iY)) for odd n, +Ind(im P(iY) / re P(iY)) for even n,
/// negated to give q - p.
HalfInt routh_real_by_parity(const RealPoly& p);
/// Ind(c_{n-1}X^{n-1} - c_{n-3}X^{n-3} + ... / c_nX^n - c_{n-2}X^{n-2} + ...).
HalfInt routh_real_unified(const RealPoly& p);

}  // namespace cauchy
