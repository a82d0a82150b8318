#include "filiform/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using filiform::BigInt;
using filiform::Rational;

TEST_CASE("rational arithmetic on known fraction pairs") {
  CHECK(Rational(1, 3) + Rational(1, 4) == Rational(7, 12));
  CHECK(Rational(1, 12) * Rational(12, 1) == Rational(1));
  CHECK(Rational(1, 3) - Rational(1, 4) == Rational(1, 12));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 12) / Rational(7, 12) == Rational(1));
}

TEST_CASE("canonical form: lowest terms, positive denominator") {
  const Rational r(4, -6);
  CHECK(r.num() == BigInt(-2));
  CHECK(r.den() == BigInt(3));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-9, 3).str() == "-3");
  CHECK(Rational(5, 10).str() == "1/2");
}

TEST_CASE("string round trip and parse errors") {
  for (const char* text : {"7/12", "-2/3", "5", "0", "-1", "100000000000000000001/3"})
    CHECK(Rational::parse(text).str() == text);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("multiplication round trip is exact on random values") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const long long an = static_cast<long long>(rng() % 2001) - 1000;
    const long long ad = 1 + static_cast<long long>(rng() % 999);
    const long long bn = 1 + static_cast<long long>(rng() % 999);
    const long long bd = 1 + static_cast<long long>(rng() % 999);
    const Rational a(an, ad), b(bn, bd);
    CHECK((a * b) / b == a);
    CHECK(a + b - b == a);
  }
}

TEST_CASE("factorial denominators stay exact") {
  const BigInt f30 = filiform::factorial(30);
  const Rational tiny(BigInt(1), f30);
  CHECK(tiny * Rational(f30) == Rational(1));
  CHECK(filiform::factorial(0) == BigInt(1));
  CHECK(filiform::factorial(12) == BigInt(479001600));
}

TEST_CASE("binomial coefficients by the multiplicative formula") {
  CHECK(filiform::binomial(0, 0) == BigInt(1));
  CHECK(filiform::binomial(5, 2) == BigInt(10));
  CHECK(filiform::binomial(12, 6) == BigInt(924));
  CHECK(filiform::binomial(3, 5) == BigInt(0));
  // Pascal rule on a grid
  for (int m = 1; m <= 15; ++m)
    for (int k = 1; k <= m; ++k)
      CHECK(filiform::binomial(m, k) == filiform::binomial(m - 1, k - 1) + filiform::binomial(m - 1, k));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 6) <= Rational(1, 3));
  CHECK(Rational(5, 4) > Rational(1));
}
