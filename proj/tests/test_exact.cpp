#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cauchy/exact.hpp"
#include "cauchy/index_value.hpp"
#include "support.hpp"

using namespace cauchy;

TEST_CASE("rational arithmetic is exact and normalized") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::power_of_two(-3) == Rational(1, 8));
  CHECK(Rational::power_of_two(4) == Rational(16));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(min(Rational(3), Rational(-1)) == Rational(-1));
}

TEST_CASE("division by zero and malformed text are rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse(""), PreconditionError);
  CHECK_THROWS_AS(GaussianRational().inverse(), DivisionByZero);
}

TEST_CASE("field laws on random samples") {
  testing::Gen gen(11);
  for (int n = 0; n < 300; ++n) {
    const Rational a = gen.rational(50, 30);
    const Rational b = gen.rational(50, 30);
    const Rational c = gen.nonzero_rational(50, 30);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a / c * c == a);
    CHECK((a - b) + b == a);
    const GaussianRational z = gen.gaussian(20, 9);
    const GaussianRational w = gen.gaussian(20, 9);
    CHECK((z * w).conj() == z.conj() * w.conj());
    CHECK((z * w).norm() == z.norm() * w.norm());
    if (!w.is_zero()) CHECK(z / w * w == z);
  }
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(GaussianRational(3, 4).norm() == Rational(25));
  CHECK(GaussianRational(Rational(0), Rational(2)).inverse() == GaussianRational(Rational(0), Rational(-1, 2)));
  CHECK(GaussianRational(3, 2).to_string() == "3+2i");
  CHECK(GaussianRational(Rational(0), Rational(-1)).to_string() == "-i");
  CHECK(GaussianRational(Rational(1, 2)).to_string() == "1/2");
}

TEST_CASE("modulus bounds sandwich |z|") {
  testing::Gen gen(12);
  for (int n = 0; n < 200; ++n) {
    const GaussianRational z = gen.gaussian(40, 7);
    const ModulusBounds m = modulus_bounds(z);
    CHECK(m.lower * m.lower <= z.norm());
    CHECK(z.norm() <= m.upper * m.upper);
  }
  CHECK(modulus_bounds(GaussianRational(-3, 4)).lower == Rational(4));
  CHECK(modulus_bounds(GaussianRational(-3, 4)).upper == Rational(7));
}

TEST_CASE("dyadic rounding") {
  CHECK(round_dyadic(Rational(1, 3), 2) == Rational(1, 4));
  CHECK(round_dyadic(Rational(3, 8), 2) == Rational(1, 2));    // tie away from zero
  CHECK(round_dyadic(Rational(-3, 8), 2) == Rational(-1, 2));
  CHECK(round_dyadic(Rational(5, 7), 0) == Rational(1));
  testing::Gen gen(13);
  for (int n = 0; n < 200; ++n) {
    const Rational x = gen.rational(1000, 997);
    const unsigned bits = static_cast<unsigned>(gen.integer(0, 20));
    const Rational r = round_dyadic(x, bits);
    CHECK((r - x).abs() <= Rational::power_of_two(-static_cast<long>(bits) - 1));
    CHECK((r * Rational::power_of_two(bits)).is_integer());
  }
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(3, 10), Rational(7, 20)) == Rational(1, 3));
  CHECK(simplest_between(Rational(-7, 3), Rational(-2, 1)) == Rational(-2));
  CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == Rational(0));
  CHECK(simplest_between(Rational(5, 7), Rational(5, 7)) == Rational(5, 7));
  // brute force: no fraction with a smaller denominator lies in [lo, hi]
  testing::Gen gen(14);
  for (int n = 0; n < 100; ++n) {
    Rational lo = gen.rational(30, 40);
    Rational hi = lo + Rational(gen.integer(1, 20), 200);
    const Rational s = simplest_between(lo, hi);
    CHECK(lo <= s);
    CHECK(s <= hi);
    for (long q = 1; q < s.denominator().get_si(); ++q) {
      const mpz_class p = (lo * Rational(q)).ceil();
      CHECK(hi < Rational(p, mpz_class(q)));
    }
  }
}

TEST_CASE("quarter and half integers") {
  const QuarterInt q = QuarterInt::from_units(3);
  CHECK(q.to_string() == "3/4");
  CHECK(QuarterInt::from_units(-2).to_string() == "-1/2");
  CHECK(QuarterInt::from_units(8).to_string() == "2");
  CHECK(QuarterInt::from_units(8).is_integer());
  CHECK_FALSE(q.is_integer());
  CHECK(half_of(HalfInt::from_units(3)) == QuarterInt::from_units(3));
  CHECK(half_of(HalfInt::from_integer(1)) == QuarterInt::from_units(2));
  const QuarterInt embedded = HalfInt::from_units(1);
  CHECK(embedded == QuarterInt::from_units(2));
  CHECK(q + q == QuarterInt::from_units(6));
  CHECK(-q < QuarterInt());
  CHECK(2 * q == QuarterInt::from_units(6));
}
