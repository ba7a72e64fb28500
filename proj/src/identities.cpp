#include "hyperhodge/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "hyperhodge/combinatorics.hpp"
#include "hyperhodge/symfun.hpp"

namespace hyperhodge {

namespace {

Rational signed_binomial(long n, long j) { return Rational(BigInt(binomial(n, j) * alternating_sign(j))); }

// prod_{n=1}^{count} (1 + (top - 2(n-1)) t)
DensePolynomial descending_product(long top, long count) {
  DensePolynomial out = DensePolynomial::constant(Rational(1));
  for (long n = 1; n <= count; ++n) out = out * DensePolynomial::one_plus(Rational(top - 2 * (n - 1)));
  return out;
}

void require_genus(int g, int min_g, const char* what) {
  if (g < min_g) throw std::domain_error(std::string(what) + ": g must be >= " + std::to_string(min_g));
}

}  // namespace

std::string to_string(const CheckedValue& value) {
  return std::visit([](const auto& v) { return v.to_string(); }, value);
}

IdentityReport IdentityReport::make(std::string name, std::string parameters, CheckedValue computed,
                                    CheckedValue expected) {
  const bool pass = computed == expected;
  return {std::move(name), std::move(parameters), std::move(computed), std::move(expected), pass};
}

std::string IdentityReport::render() const {
  std::ostringstream os;
  os << "identity:   " << name << "\n"
     << "parameters: " << parameters << "\n"
     << "computed:   " << hyperhodge::to_string(computed) << "\n"
     << "expected:   " << hyperhodge::to_string(expected) << "\n"
     << "result:     " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Rational alternating_power_sum(int m, int p) {
  if (m < 0 || p < 0) throw std::domain_error("alternating_power_sum: negative argument");
  BigInt acc = 0;
  for (long k = 0; k <= m; ++k) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(p));  // 0^0 = 1
    acc += binomial(m, k) * power * alternating_sign(k);
  }
  return Rational(acc);
}

int bound_value(VanishingBound bound, std::size_t n) {
  const int two_n = 2 * static_cast<int>(n);
  return bound == VanishingBound::TwoN ? two_n : two_n - 1;
}

Rational product_vanishing_sum_direct(std::span<const Rational> m_values, VanishingBound bound) {
  if (m_values.empty()) throw std::domain_error("product_vanishing_sum: need at least one value");
  const int upper = bound_value(bound, m_values.size());
  Rational acc;
  for (long k = 0; k <= upper; ++k) {
    Rational product(1);
    for (const Rational& m : m_values) product *= m - Rational(k);
    acc += signed_binomial(upper, k) * product;
  }
  return acc;
}

Rational product_vanishing_sum(std::span<const Rational> m_values, VanishingBound bound) {
  if (m_values.empty()) throw std::domain_error("product_vanishing_sum: need at least one value");
  const int upper = bound_value(bound, m_values.size());
  const int n = static_cast<int>(m_values.size());
  // prod_i (m_i - k) = sum_i e_i(m) (-1)^{n-i} k^{n-i}
  const std::vector<Rational> e = elementary_all(m_values);
  Rational acc;
  for (int i = 0; i <= n; ++i)
    acc += e[static_cast<std::size_t>(i)] * Rational(alternating_sign(n - i)) * alternating_power_sum(upper, n - i);

  const Rational direct = product_vanishing_sum_direct(m_values, bound);
  if (acc != direct)
    throw std::logic_error("product_vanishing_sum: expansion gives " + acc.to_string() + " but direct sum gives " +
                           direct.to_string());
  return acc;
}

DensePolynomial p_polynomial(int g) {
  require_genus(g, 1, "p_polynomial");
  DensePolynomial acc;
  for (long j = 0; j <= 2L * g - 1; ++j) acc += signed_binomial(2L * g - 1, j) * descending_product(2L * g - 1 - j, g);
  return acc;
}

DensePolynomial q_polynomial(int g) {
  require_genus(g, 1, "q_polynomial");
  DensePolynomial acc;
  for (long j = 0; j <= 2L * g; ++j) acc += signed_binomial(2L * g, j) * descending_product(2L * g + 1 - j, g);
  return acc;
}

DensePolynomial hat_transform(const DensePolynomial& p, int g) {
  if (g < 0) throw std::domain_error("hat_transform: negative g");
  const Degree d = p.degree();
  if (!d.is_neg_infinity() && d.value() > static_cast<std::size_t>(g))
    throw std::domain_error("hat_transform: degree " + d.to_string() + " exceeds g = " + std::to_string(g));
  std::vector<Rational> reversed(static_cast<std::size_t>(g) + 1);
  for (std::size_t n = 0; n <= static_cast<std::size_t>(g); ++n) reversed[static_cast<std::size_t>(g) - n] = p.coefficient(n);
  return DensePolynomial(std::move(reversed));
}

Rational hat_p_at(int g, const Rational& r) {
  require_genus(g, 1, "hat_p_at");
  std::vector<Rational> m;
  for (long n = 1; n <= g; ++n) m.push_back(r + Rational(2L * g - 1 - 2 * (n - 1)));
  return product_vanishing_sum(m, VanishingBound::TwoNMinusOne);
}

DensePolynomial eqn_lhs(int g) {
  require_genus(g, 1, "eqn_lhs");
  return gen_product(odd_values(static_cast<std::size_t>(g)), Sign::Plus);
}

DensePolynomial eqn_rhs(int g) {
  require_genus(g, 1, "eqn_rhs");
  const long top = 2L * g - 1;
  DensePolynomial acc;
  for (long j = 1; j <= top; j += 2) {
    const auto left = gen_product(even_values(static_cast<std::size_t>((top - j) / 2)), Sign::Plus);
    const auto right = gen_product(even_values(static_cast<std::size_t>((j - 1) / 2)), Sign::Minus);
    acc += Rational(binomial(top, j)) * (left * right);
  }
  for (long j = 2; j <= top - 1; j += 2) {
    const auto left = gen_product(odd_values(static_cast<std::size_t>((2L * g - j) / 2)), Sign::Plus);
    const auto right = gen_product(odd_values(static_cast<std::size_t>(j / 2)), Sign::Minus);
    acc -= Rational(binomial(top, j)) * (left * right);
  }
  return acc;
}

IdentityReport eqn_check(int g) {
  require_genus(g, 2, "eqn_check");
  return IdentityReport::make("eqn: D recursion as a polynomial identity", "g=" + std::to_string(g),
                              eqn_lhs(g) - eqn_rhs(g), DensePolynomial());
}

IdentityReport paired_eqn_check(int g) {
  require_genus(g, 1, "paired_eqn_check");
  const long top = 2L * g;
  const DensePolynomial lhs = gen_product(even_values(static_cast<std::size_t>(g)), Sign::Plus);
  DensePolynomial rhs;
  for (long j = 1; j <= top - 1; j += 2) {
    const auto left = gen_product(odd_values(static_cast<std::size_t>((top + 1 - j) / 2)), Sign::Plus);
    const auto right = gen_product(odd_values(static_cast<std::size_t>((j - 1) / 2)), Sign::Minus);
    rhs += Rational(binomial(top, j)) * (left * right);
  }
  for (long j = 2; j <= top; j += 2) {
    const auto left = gen_product(even_values(static_cast<std::size_t>((top - j) / 2)), Sign::Plus);
    const auto right = gen_product(even_values(static_cast<std::size_t>((j - 2) / 2)), Sign::Minus);
    rhs -= Rational(binomial(top, j)) * (left * right);
  }
  return IdentityReport::make("eqn: d recursion as a polynomial identity", "g=" + std::to_string(g), lhs - rhs,
                              DensePolynomial());
}

}  // namespace hyperhodge
