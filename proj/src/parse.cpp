#include "cauchy/parse.hpp"

#include <cctype>
#include <optional>

namespace cauchy {

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

bool PolyExpr::is_real() const { return imag_part(poly).is_zero(); }

RealPoly PolyExpr::real() const {
  if (!is_real()) throw PreconditionError("polynomial has non-real coefficients: " + print());
  return real_part(poly);
}

namespace {

// Univariate values. The variable letter is fixed by its first occurrence.
struct UnivariateAlgebra {
  using Value = ComplexPoly;
  std::optional<char> variable;

  Value constant(const Rational& c) const { return Value::constant(GaussianRational(c)); }

  Value letter(char c, std::size_t pos) {
    if (c == 'i') return Value::constant(GaussianRational::i());
    if (c != 'Z' && c != 'X') {
      throw ParseError(pos, std::string("unknown variable '") + c + "' (expected Z or X)");
    }
    if (variable && *variable != c) {
      throw ParseError(pos, std::string("mixed variables ") + *variable + " and " + c);
    }
    variable = c;
    return Value::x();
  }

  static unsigned degree(const Value& v) { return v.degree() < 0 ? 0 : static_cast<unsigned>(v.degree()); }
  static Value raise(const Value& v, unsigned n) { return power(v, n); }

  static Value divide(const Value& a, const Value& b, std::size_t pos) {
    if (b.is_zero()) throw ParseError(pos, "division by zero");
    if (b.degree() > 0) throw ParseError(pos, "division by a non-constant polynomial");
    return a * b.leading().inverse();
  }
};

struct BivariateAlgebra {
  using Value = BivariatePoly;

  Value constant(const Rational& c) const { return Value::constant(c); }

  Value letter(char c, std::size_t pos) const {
    if (c == 'X') return Value::x();
    if (c == 'Y') return Value::y();
    if (c == 'i') throw ParseError(pos, "map components must be real");
    throw ParseError(pos, std::string("unknown variable '") + c + "' (expected X or Y)");
  }

  static unsigned degree(const Value& v) { return v.total_degree(); }
  static Value raise(const Value& v, unsigned n) {
    Value acc = Value::constant(Rational(1));
    for (unsigned k = 0; k < n; ++k) acc = acc * v;
    return acc;
  }

  static Value divide(const Value& a, const Value& b, std::size_t pos) {
    if (b.is_zero()) throw ParseError(pos, "division by zero");
    if (b.total_degree() > 0) throw ParseError(pos, "division by a non-constant polynomial");
    return a * Value::constant(b.terms().begin()->second.inverse());
  }
};

template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, Algebra& algebra) : text_(text), algebra_(algebra) {}

  Value parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Value v = expression();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  // expression := term (('+' | '-') term)*
  Value expression() {
    Value acc = term();
    while (!at_end() && (peek() == '+' || peek() == '-')) {
      const char op = take();
      Value rhs = term();
      if (op == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  // term := factor (('*' | '/') factor | factor)*, juxtaposition multiplies
  Value term() {
    Value acc = factor();
    while (!at_end()) {
      const char c = peek();
      if (c == '*') {
        take();
        acc = acc * factor();
      } else if (c == '/') {
        const std::size_t at = pos_;
        take();
        acc = Algebra::divide(acc, factor(), at);
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  // factor := ('+' | '-') factor | primary ('^' exponent)?
  Value factor() {
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    if (peek() == '-') {
      take();
      return Value() - factor();
    }
    if (peek() == '+') {
      take();
      return factor();
    }
    Value base = primary();
    if (!at_end() && peek() == '^') {
      take();
      const unsigned n = exponent();
      if (static_cast<unsigned long long>(Algebra::degree(base)) * n > kMaxExponent) {
        throw ParseError(pos_, "resulting degree exceeds " + std::to_string(kMaxExponent));
      }
      base = Algebra::raise(base, n);
    }
    return base;
  }

  unsigned exponent() {
    if (at_end()) throw ParseError(pos_, "missing exponent");
    if (peek() == '-') throw ParseError(pos_, "negative exponent");
    if (peek() == '(') {
      // allow Z^(3) but nothing that is not a literal
      const std::size_t open = pos_;
      take();
      const unsigned n = exponent();
      if (at_end() || peek() != ')') throw ParseError(open, "unbalanced parenthesis in exponent");
      take();
      return n;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(pos_, "exponent must be a nonnegative integer");
    }
    const std::size_t start = pos_;
    unsigned long long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (n > kMaxExponent) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    skip_space();
    return static_cast<unsigned>(n);
  }

  Value primary() {
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      take();
      Value inner = expression();
      if (at_end() || peek() != ')') throw ParseError(open, "unbalanced parenthesis");
      take();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        throw ParseError(pos_, "decimal literals are not supported; write a fraction");
      }
      Rational value = Rational::parse(std::string(text_.substr(start, pos_ - start)));
      skip_space();
      return algebra_.constant(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      take();
      return algebra_.letter(c, at);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  static bool starts_primary(char c) {
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() {
    const char c = text_[pos_++];
    skip_space();
    return c;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Algebra& algebra_;
};

}  // namespace

PolyExpr parse_poly(std::string_view text) {
  UnivariateAlgebra algebra;
  Parser<UnivariateAlgebra> parser(text, algebra);
  PolyExpr out;
  out.poly = parser.parse();
  out.source = std::string(text);
  out.variable = algebra.variable.value_or('Z');
  return out;
}

BivariatePoly parse_bivariate(std::string_view text) {
  BivariateAlgebra algebra;
  return Parser<BivariateAlgebra>(text, algebra).parse();
}

}  // namespace cauchy
