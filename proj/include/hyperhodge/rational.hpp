#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperhodge {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Zero is stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  // Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "n" or "n/d" with optional leading sign on n.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  // Multiplicative inverse; throws std::domain_error for zero.
  Rational inverse() const;
  Rational pow(std::int64_t exponent) const;

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  // Decimal expansion rounded half away from zero to `digits` places.
  std::string to_decimal(unsigned digits) const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Arithmetic with an explicit operator code, reporting failure as an error
// string instead of an exception.
enum class ArithOp { Add, Subtract, Multiply, Divide };

struct ArithResult {
  bool ok = false;
  Rational value;
  std::string error;
};

ArithResult rat_arith(const Rational& a, const Rational& b, ArithOp op);

}  // namespace hyperhodge
