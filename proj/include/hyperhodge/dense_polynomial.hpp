#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// Polynomial degree with an explicit minus-infinity state for the zero
// polynomial. There is no implicit conversion to an integer; callers must
// check is_neg_infinity() before asking for value().
class Degree {
 public:
  static constexpr Degree neg_infinity() noexcept { return Degree(); }
  explicit constexpr Degree(std::size_t d) noexcept : finite_(true), value_(d) {}

  constexpr bool is_neg_infinity() const noexcept { return !finite_; }
  // Throws std::logic_error for minus infinity.
  std::size_t value() const;

  // -inf absorbs: deg(0 * p) = -inf.
  friend Degree operator+(Degree a, Degree b) noexcept {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  constexpr Degree() noexcept = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

// Univariate polynomial over the rationals in a formal variable t.
// coefficients()[n] is the coefficient of t^n; the highest stored
// coefficient is never zero.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Rational> coefficients);
  DensePolynomial(std::initializer_list<Rational> coefficients);

  static DensePolynomial constant(const Rational& c);
  static DensePolynomial monomial(const Rational& c, std::size_t power);
  // 1 + c t
  static DensePolynomial one_plus(const Rational& c);

  std::span<const Rational> coefficients() const { return coeffs_; }
  // Coefficient of t^n, zero past the degree.
  Rational coefficient(std::size_t n) const;
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& at) const;

  DensePolynomial operator-() const;
  DensePolynomial& operator+=(const DensePolynomial& rhs);
  DensePolynomial& operator-=(const DensePolynomial& rhs);
  DensePolynomial& operator*=(const Rational& scalar);

  friend DensePolynomial operator+(DensePolynomial lhs, const DensePolynomial& rhs) { return lhs += rhs; }
  friend DensePolynomial operator-(DensePolynomial lhs, const DensePolynomial& rhs) { return lhs -= rhs; }
  friend DensePolynomial operator*(DensePolynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend DensePolynomial operator*(const Rational& lhs, DensePolynomial rhs) { return rhs *= lhs; }
  friend DensePolynomial operator*(const DensePolynomial& lhs, const DensePolynomial& rhs);
  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

  // e.g. "1 + 4*t + 3*t^2"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

DensePolynomial poly_mul(const DensePolynomial& p, const DensePolynomial& q);

std::ostream& operator<<(std::ostream& os, const DensePolynomial& p);

}  // namespace hyperhodge
