#pragma once

#include <span>
#include <string>
#include <variant>

#include "hyperhodge/dense_polynomial.hpp"
#include "hyperhodge/laurent_polynomial.hpp"
#include "hyperhodge/rational.hpp"

namespace hyperhodge {

using CheckedValue = std::variant<Rational, DensePolynomial, LaurentPolynomial>;

std::string to_string(const CheckedValue& value);

// Outcome of one exact check. `pass` is true exactly when computed == expected.
struct IdentityReport {
  std::string name;
  std::string parameters;
  CheckedValue computed;
  CheckedValue expected;
  bool pass = false;

  static IdentityReport make(std::string name, std::string parameters, CheckedValue computed, CheckedValue expected);
  // Multi-line rendering with every field.
  std::string render() const;
};

// sum_{k=0}^{m} (-1)^k C(m,k) k^p with 0^0 = 1. Zero whenever p < m.
Rational alternating_power_sum(int m, int p);

// Upper summation limit relative to n = number of m-values.
enum class VanishingBound { TwoNMinusOne, TwoN };

int bound_value(VanishingBound bound, std::size_t n);

// sum_{k=0}^{B} (-1)^k C(B,k) prod_{i=1}^{n} (m_i - k), B = 2n-1 or 2n.
// Evaluated by expanding the product into elementary symmetric functions of
// the m_i and summing alternating power sums; cross-checked against the
// direct evaluation, throwing std::logic_error if the two ever disagree.
// Throws std::domain_error when m_values is empty.
Rational product_vanishing_sum(std::span<const Rational> m_values, VanishingBound bound);
Rational product_vanishing_sum_direct(std::span<const Rational> m_values, VanishingBound bound);

// P(t) = sum_{j=0}^{2g-1} (-1)^j C(2g-1,j) prod_{n=1}^{g} (1 + (2g-1-j-2(n-1)) t).
// Vanishes for g >= 2; P for g = 1 is t.
DensePolynomial p_polynomial(int g);

// sum_{j=0}^{2g} (-1)^j C(2g,j) prod_{n=1}^{g} (1 + (2g+1-j-2(n-1)) t).
// Vanishes for g >= 1.
DensePolynomial q_polynomial(int g);

// t^g p(1/t): coefficient reversal padded to length g+1. Throws
// std::domain_error if deg p > g.
DensePolynomial hat_transform(const DensePolynomial& p, int g);

// Value of t^g P(1/t) at t = r computed without building P: it equals the
// product sum with m_n = r + 2g-1-2(n-1) and B = 2g-1.
Rational hat_p_at(int g, const Rational& r);

// Polynomial identity equivalent to the D recursion holding for the closed
// form at k = 2g+2:
//   prod_{n=1}^{g} (1+(2n-1)t)
//     = sum_{j odd}  C(2g-1,j) prod_{n<=(2g-1-j)/2} (1+2nt) prod_{n<=(j-1)/2} (1-2nt)
//     - sum_{j even} C(2g-1,j) prod_{n<=(2g-j)/2} (1+(2n-1)t) prod_{n<=j/2} (1-(2n-1)t)
// with odd j in 1..2g-1 and even j in 2..2g-2. Reports LHS - RHS against 0.
IdentityReport eqn_check(int g);
DensePolynomial eqn_lhs(int g);
DensePolynomial eqn_rhs(int g);

// The same construction for the d recursion:
//   prod_{n=1}^{g} (1+2nt)
//     = sum_{j odd}  C(2g,j) prod_{n<=(2g+1-j)/2} (1+(2n-1)t) prod_{n<=(j-1)/2} (1-(2n-1)t)
//     - sum_{j even} C(2g,j) prod_{n<=(2g-j)/2} (1+2nt) prod_{n<=(j-2)/2} (1-2nt)
// with odd j in 1..2g-1 and even j in 2..2g.
IdentityReport paired_eqn_check(int g);

}  // namespace hyperhodge
