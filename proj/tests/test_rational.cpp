#include "hyperhodge/combinatorics.hpp"
#include "hyperhodge/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

using hyperhodge::ArithOp;
using hyperhodge::BigInt;
using hyperhodge::Rational;

namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

// Factorial-ratio reference for small binomials.
BigInt binomial_reference(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 1; i <= n; ++i) num *= i;
  for (long i = 1; i <= k; ++i) den *= i;
  for (long i = 1; i <= n - k; ++i) den *= i;
  return num / den;
}

}  // namespace

TEST_CASE("rat_arith examples") {
  auto product = rat_arith(q(1, 2), q(1, 2), ArithOp::Multiply);
  REQUIRE(product.ok);
  CHECK(product.value == q(1, 4));

  auto sum = rat_arith(q(1, 4), q(-1, 4), ArithOp::Add);
  REQUIRE(sum.ok);
  CHECK(sum.value.is_zero());
  CHECK(sum.value.to_string() == "0");
  CHECK(sum.value.denominator() == 1);

  auto quotient = rat_arith(q(23, 8), q(23, 8), ArithOp::Divide);
  REQUIRE(quotient.ok);
  CHECK(quotient.value == Rational(1));

  auto difference = rat_arith(q(1, 3), q(1, 6), ArithOp::Subtract);
  REQUIRE(difference.ok);
  CHECK(difference.value == q(1, 6));
}

TEST_CASE("division by zero is reported, never silent") {
  auto result = rat_arith(q(3, 7), Rational(), ArithOp::Divide);
  CHECK_FALSE(result.ok);
  CHECK(result.error.find("division by zero") != std::string::npos);

  Rational x(5);
  CHECK_THROWS_AS(x /= Rational(), std::domain_error);
  CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("canonical form") {
  CHECK(q(6, -4).numerator() == -3);
  CHECK(q(6, -4).denominator() == 2);
  CHECK(q(0, -9).to_string() == "0");
  CHECK(q(10, 5).is_integer());
  CHECK(q(-3, 9).to_string() == "-1/3");
  CHECK(q(-3, 9).sign() == -1);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("1/3") == q(1, 3));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("4/8") == q(1, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("pow and inverse") {
  CHECK(q(1, 2).pow(5) == q(1, 32));
  CHECK(q(2, 3).pow(-2) == q(9, 4));
  CHECK(q(7, 5).pow(0) == Rational(1));
  CHECK(q(-2, 3).inverse() == q(-3, 2));
}

TEST_CASE("ordering") {
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(-1, 2) < Rational());
  CHECK(q(2, 4) == q(1, 2));
}

TEST_CASE("to_decimal rounds half away from zero") {
  CHECK(q(1, 3).to_decimal(4) == "0.3333");
  CHECK(q(2, 3).to_decimal(4) == "0.6667");
  CHECK(q(1, 8).to_decimal(2) == "0.13");
  CHECK(q(-1, 8).to_decimal(2) == "-0.13");
  CHECK(q(23, 8).to_decimal(0) == "3");
  CHECK(Rational(-4).to_decimal(1) == "-4.0");
  CHECK(q(-1, 1000).to_decimal(2) == "0.00");
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 500);
  for (int draw = 0; draw < 500; ++draw) {
    const Rational a = q(num(rng), den(rng));
    const Rational b = q(num(rng), den(rng));
    const Rational c = q(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("binomial matches factorial reference") {
  for (long n = 0; n <= 40; ++n)
    for (long k = -1; k <= n + 1; ++k) CHECK(hyperhodge::binomial(n, k) == binomial_reference(n, k));
  CHECK(hyperhodge::alternating_sign(0) == 1);
  CHECK(hyperhodge::alternating_sign(3) == -1);
}
