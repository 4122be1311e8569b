#pragma once

// Sign variations, the Cauchy index of real fractions and real root counting.
// Every index here is computed through a Sturm chain; nothing is approximate.

#include <span>
#include <vector>

#include "cauchy/index_value.hpp"
#include "cauchy/sturm_chain.hpp"

namespace cauchy {

/// V(s) = sum of (1/2)|sign(s_{k-1}) - sign(s_k)|; zeros give half changes.
HalfInt sign_changes(std::span<const Rational> values);
HalfInt sign_changes_of_signs(std::span<const int> signs);

/// V_a - V_b over the chain members.
HalfInt sign_var_diff(const SturmChain& chain, const Rational& a, const Rational& b);

/// V_{-inf} - V_{+inf}, read off the leading coefficients.
HalfInt sign_var_diff_on_line(const SturmChain& chain);

/// Ind_a^b(R/S) with boundary poles counted as 1/2. Antisymmetric in (a, b),
/// zero for a = b and for the degenerate fractions R = 0 or S = 0.
HalfInt cauchy_index(const RealPoly& r, const RealPoly& s, const Rational& a, const Rational& b);

/// Ind over the whole real line.
HalfInt cauchy_index_on_line(const RealPoly& r, const RealPoly& s);

/// Number of distinct real roots of p in [a, b]; roots at a or b count 1/2.
HalfInt count_real_roots(const RealPoly& p, const Rational& a, const Rational& b);

/// Number of distinct real roots of p.
int count_real_roots_on_line(const RealPoly& p);

/// Sign changes of the coefficient sequence with zeros discarded; bounds the
/// number of positive roots counted with multiplicity.
int descartes_bound(std::span<const Rational> coeffs);

struct InversionTriple {
  HalfInt index_q_over_p;
  HalfInt index_p_over_q;
  HalfInt variation;  // V_a^b(P, Q)

  friend bool operator==(const InversionTriple&, const InversionTriple&) = default;
};

/// (Ind(Q/P), Ind(P/Q), V_a^b(P, Q)), whose first two entries sum to the third.
/// Throws PreconditionError when P and Q share a zero at a or b.
InversionTriple inversion_check(const RealPoly& p, const RealPoly& q, const Rational& a,
                                const Rational& b);

}  // namespace cauchy
