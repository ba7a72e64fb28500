#include "hyperhodge/dense_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyperhodge {

std::size_t Degree::value() const {
  if (!finite_) throw std::logic_error("Degree: value() of minus infinity");
  return value_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

DensePolynomial::DensePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

DensePolynomial::DensePolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

DensePolynomial DensePolynomial::constant(const Rational& c) { return DensePolynomial({c}); }

DensePolynomial DensePolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return DensePolynomial(std::move(coeffs));
}

DensePolynomial DensePolynomial::one_plus(const Rational& c) { return DensePolynomial({Rational(1), c}); }

void DensePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational DensePolynomial::coefficient(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(); }

Degree DensePolynomial::degree() const {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
}

Rational DensePolynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

DensePolynomial DensePolynomial::operator-() const {
  DensePolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

DensePolynomial operator*(const DensePolynomial& lhs, const DensePolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    if (lhs.coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
  }
  // Leading coefficient is a product of two nonzero rationals, so nothing to trim.
  return DensePolynomial(std::move(out));
}

DensePolynomial poly_mul(const DensePolynomial& p, const DensePolynomial& q) { return p * q; }

std::string DensePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Rational& c = coeffs_[n];
    if (c.is_zero()) continue;
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != Rational(1)) os << magnitude << "*";
    os << var;
    if (n > 1) os << "^" << n;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DensePolynomial& p) { return os << p.to_string(); }

}  // namespace hyperhodge
