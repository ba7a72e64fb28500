#include "hyperhodge/symfun.hpp"

#include <algorithm>

#include "hyperhodge/combinatorics.hpp"

namespace hyperhodge {

ValueSet odd_values(std::size_t n) {
  ValueSet out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) out.emplace_back(static_cast<long>(2 * j - 1));
  return out;
}

ValueSet even_values(std::size_t n) {
  ValueSet out;
  out.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) out.emplace_back(static_cast<long>(2 * j));
  return out;
}

std::vector<Rational> elementary_all(std::span<const Rational> values) {
  std::vector<Rational> e(values.size() + 1);
  e[0] = Rational(1);
  std::size_t seen = 0;
  for (const Rational& x : values) {
    ++seen;
    for (std::size_t i = seen; i >= 1; --i) e[i] += x * e[i - 1];
  }
  return e;
}

Rational elementary(std::size_t i, std::span<const Rational> values) {
  if (i == 0) return Rational(1);
  if (i > values.size()) return Rational();
  // Only e_0..e_i are needed; truncate the incremental product there.
  std::vector<Rational> e(i + 1);
  e[0] = Rational(1);
  std::size_t seen = 0;
  for (const Rational& x : values) {
    ++seen;
    for (std::size_t j = std::min(seen, i); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[i];
}

DensePolynomial gen_product(std::span<const Rational> values, Sign sign) {
  std::vector<Rational> e = elementary_all(values);
  if (sign == Sign::Minus) {
    for (std::size_t i = 1; i < e.size(); i += 2) e[i] = -e[i];
  }
  return DensePolynomial(std::move(e));
}

Rational signed_convolution(std::span<const Rational> a, std::span<const Rational> b, std::size_t i) {
  Rational acc;
  for (std::size_t l = 0; l <= i; ++l) {
    const Rational eb = elementary(l, b);
    if (eb.is_zero()) continue;
    const Rational term = elementary(i - l, a) * eb;
    if (alternating_sign(static_cast<long>(l)) > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace hyperhodge
