#pragma once

// Text syntax for polynomials: rational literals, the imaginary unit i, one
// variable, + - * / ^, parentheses and implicit multiplication ("3Z^2", "2(Z-i)").

#include <cstddef>
#include <string>
#include <string_view>

#include "cauchy/brouwer.hpp"
#include "cauchy/errors.hpp"
#include "cauchy/polynomial.hpp"

namespace cauchy {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  /// Zero-based offset into the source text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct PolyExpr {
  std::string source;
  ComplexPoly poly;
  /// 'Z' or 'X'; 'Z' when the text has no variable.
  char variable = 'Z';

  bool is_real() const;
  RealPoly real() const;
  /// Normalized text; parse_poly(print()) gives back the same polynomial.
  std::string print() const { return to_string(poly, variable); }
};

/// Exponents above this are rejected before any expansion happens.
inline constexpr unsigned kMaxExponent = 4096;

/// Univariate polynomial in Z or X (not both) over the Gaussian rationals.
PolyExpr parse_poly(std::string_view text);

/// Real polynomial in X and Y; the imaginary unit and Z are rejected.
BivariatePoly parse_bivariate(std::string_view text);

}  // namespace cauchy
