#include "hyperhodge/laurent_polynomial.hpp"

#include <ostream>
#include <sstream>

namespace hyperhodge {

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, long exponent) {
  LaurentPolynomial out;
  out.add_term(exponent, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::from_dense(const DensePolynomial& p) {
  LaurentPolynomial out;
  const auto coeffs = p.coefficients();
  for (std::size_t n = 0; n < coeffs.size(); ++n) out.add_term(static_cast<long>(n), coeffs[n]);
  return out;
}

std::optional<DensePolynomial> LaurentPolynomial::to_dense() const {
  if (terms_.empty()) return DensePolynomial();
  if (terms_.begin()->first < 0) return std::nullopt;
  std::vector<Rational> coeffs(static_cast<std::size_t>(terms_.rbegin()->first) + 1);
  for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e)] = c;
  return DensePolynomial(std::move(coeffs));
}

Rational LaurentPolynomial::coefficient(long exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPolynomial::add_term(long exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
    } else {
      os << "(" << c << ")*" << var << "^" << e;
    }
  }
  return os.str();
}

LaurentPolynomial laurent_sum(std::span<const LaurentPolynomial> terms) {
  LaurentPolynomial out;
  for (const auto& t : terms) out += t;
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

}  // namespace hyperhodge
