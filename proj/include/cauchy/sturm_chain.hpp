#pragma once

#include <vector>

#include "cauchy/polynomial.hpp"

namespace cauchy {

/// c^d * S = P * Q - R with deg R < deg P, c = lc(P) and d even.
struct PseudoDivision {
  RealPoly quotient;
  RealPoly remainder;
  unsigned exponent = 0;
};

/// Pseudo-euclidean division of s by p. Throws DivisionByZero for p = 0.
PseudoDivision pseudo_div(const RealPoly& s, const RealPoly& p);

/// Certificate for one interior link k of a chain:
///   a * S_{k-1} + b * S_{k+1} = q * S_k   with a, b > 0.
struct ChainLink {
  Rational a;
  Rational b;
  RealPoly q;
};

/// Sturm chain (S_0, ..., S_n) of a fraction R/S. S_0 and S_1 are positive
/// multiples of S/g and R/g (g = gcd), the terminal member is the constant
/// +1 or -1, and every interior member carries a positive three-term link.
class SturmChain {
 public:
  SturmChain() = default;
  SturmChain(std::vector<RealPoly> polys, std::vector<ChainLink> links, RealPoly divisor)
      : polys_(std::move(polys)), links_(std::move(links)), divisor_(std::move(divisor)) {}

  const std::vector<RealPoly>& polys() const { return polys_; }
  /// links()[k - 1] certifies member k for 0 < k < n.
  const std::vector<ChainLink>& links() const { return links_; }
  /// Monic gcd(R, S) removed from every member (zero when R = S = 0).
  const RealPoly& divisor() const { return divisor_; }
  std::size_t length() const { return polys_.size(); }

  std::vector<int> signs_at(const Rational& x) const;
  /// Signs for x -> +infinity (direction > 0) or x -> -infinity (direction < 0).
  std::vector<int> signs_at_infinity(int direction) const;

  /// Checks a*S_{k-1} + b*S_{k+1} == q*S_k with a, b > 0 for every link.
  bool certificate_holds() const;

 private:
  std::vector<RealPoly> polys_;
  std::vector<ChainLink> links_;
  RealPoly divisor_;
};

/// Chain for R/S built from primitive pseudo-remainders. Exceptional chains:
/// (1) when R = 0, and (0, 1) when S = 0 and R != 0.
SturmChain sturm_chain(const RealPoly& r, const RealPoly& s);

}  // namespace cauchy
