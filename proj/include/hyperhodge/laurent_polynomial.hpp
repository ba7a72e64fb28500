#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hyperhodge/dense_polynomial.hpp"
#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// Finitely supported series sum_e c_e t^e with integer exponents. Zero
// coefficients are never stored; the empty map is the zero element.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& c) : LaurentPolynomial(monomial(c, 0)) {}

  static LaurentPolynomial monomial(const Rational& c, long exponent);
  static LaurentPolynomial from_dense(const DensePolynomial& p);

  // Returns nullopt if any exponent is negative.
  std::optional<DensePolynomial> to_dense() const;

  const Terms& terms() const { return terms_; }
  Rational coefficient(long exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs += rhs; }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs -= rhs; }
  friend LaurentPolynomial operator*(LaurentPolynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(long exponent, const Rational& c);
  Terms terms_;
};

LaurentPolynomial laurent_sum(std::span<const LaurentPolynomial> terms);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace hyperhodge
