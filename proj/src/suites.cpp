#include "hyperhodge/suites.hpp"

#include <algorithm>

#include "hyperhodge/localization.hpp"

namespace hyperhodge {

namespace {

std::string mg(int m, int p) { return "m=" + std::to_string(m) + " p=" + std::to_string(p); }
std::string gr(int g, int r) { return "g=" + std::to_string(g) + " t=" + std::to_string(r); }
std::string g_only(int g) { return "g=" + std::to_string(g); }

std::string join(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t n = 0; n < values.size(); ++n) out += (n ? ", " : "") + values[n].to_string();
  return out + ")";
}

}  // namespace

void SuiteResult::record(IdentityReport report) {
  if (report.pass) {
    ++passed;
    return;
  }
  ++failed;
  if (!first_failure) first_failure = std::move(report);
}

void SuiteResult::merge(const SuiteResult& other) {
  passed += other.passed;
  failed += other.failed;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  if (!first_failure && other.first_failure) first_failure = other.first_failure;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  const long n = num(rng);
  const long d = den(rng);
  return Rational(BigInt(n), BigInt(d));
}

IdentitySuiteOptions identity_options_for(int max_g) {
  IdentitySuiteOptions options;
  options.max_g = max_g;
  options.hat_max_g = std::min(max_g, 20);
  return options;
}

std::vector<SuiteResult> run_identity_suites(const IdentitySuiteOptions& options) {
  std::vector<SuiteResult> suites;

  SuiteResult aps("alternating-power-sum");
  for (int m = 1; m <= options.max_m; ++m)
    for (int p = 0; p < m; ++p)
      aps.record(IdentityReport::make("alternating power sum", mg(m, p), alternating_power_sum(m, p), Rational()));
  suites.push_back(std::move(aps));

  SuiteResult products("product-vanishing-sum");
  std::mt19937_64 rng(options.seed);
  for (int n = 1; n <= options.max_n; ++n) {
    for (int draw = 0; draw < options.draws_per_n; ++draw) {
      std::vector<Rational> m(static_cast<std::size_t>(n));
      for (auto& v : m) v = random_rational(rng);
      products.record(IdentityReport::make("product vanishing sum, bound 2n", "m=" + join(m),
                                           product_vanishing_sum(m, VanishingBound::TwoN), Rational()));
      if (n >= 2)
        products.record(IdentityReport::make("product vanishing sum, bound 2n-1", "m=" + join(m),
                                             product_vanishing_sum(m, VanishingBound::TwoNMinusOne), Rational()));
    }
  }
  suites.push_back(std::move(products));

  SuiteResult p_suite("p-polynomial");
  if (options.max_g < 2) p_suite.notes.push_back("skipped for g=1 (out of theorem range)");
  for (int g = 2; g <= options.max_g; ++g) {
    const DensePolynomial p = p_polynomial(g);
    p_suite.record(IdentityReport::make("P(t) vanishes", g_only(g), p, DensePolynomial()));
    if (g > options.hat_max_g) continue;
    // The root argument, evaluated without building P.
    for (int r = 1; r <= g + 1; ++r)
      p_suite.record(IdentityReport::make("hat P has root", gr(g, r), hat_p_at(g, Rational(r)), Rational()));
    const DensePolynomial hat = hat_transform(p, g);
    for (int r = 1; r <= g + 1; ++r)
      p_suite.record(IdentityReport::make("hat_transform(P) has root", gr(g, r), hat.evaluate(Rational(r)), Rational()));
  }
  suites.push_back(std::move(p_suite));

  SuiteResult q_suite("q-polynomial");
  for (int g = 1; g <= options.max_g; ++g)
    q_suite.record(IdentityReport::make("Q(t) vanishes", g_only(g), q_polynomial(g), DensePolynomial()));
  suites.push_back(std::move(q_suite));

  SuiteResult eqn("eqn");
  if (options.max_g < 2) eqn.notes.push_back("D-recursion identity skipped for g=1 (out of theorem range)");
  for (int g = 2; g <= options.max_g; ++g) eqn.record(eqn_check(g));
  for (int g = 1; g <= options.max_g; ++g) eqn.record(paired_eqn_check(g));
  for (int g = 1; g <= std::min(options.max_g, 10); ++g)
    eqn.record(IdentityReport::make("eqn sides differ by P(t)", g_only(g), eqn_lhs(g) - eqn_rhs(g), p_polynomial(g)));
  suites.push_back(std::move(eqn));

  SuiteResult boundary("boundary-cases");
  boundary.record(IdentityReport::make("alternating power sum at p = m", mg(1, 1), alternating_power_sum(1, 1),
                                       Rational(-1)));
  boundary.record(IdentityReport::make("P(t) at g = 1", g_only(1), p_polynomial(1),
                                       DensePolynomial::monomial(Rational(1), 1)));
  const std::vector<Rational> five{Rational(5)};
  boundary.record(IdentityReport::make("product sum, n = 1, bound 2n-1", "m=(5)",
                                       product_vanishing_sum(five, VanishingBound::TwoNMinusOne), Rational(1)));
  suites.push_back(std::move(boundary));

  return suites;
}

SuiteResult run_recursion_suite(int max_k, const BaseValues& base) {
  SuiteResult suite("closed-vs-recursive");
  MemoTable memo;
  for (HodgeKind kind : {HodgeKind::Twisted, HodgeKind::Paired}) {
    for (int k = 4; k <= max_k; k += 2) {
      for (int i = 0; i <= (k - 2) / 2; ++i) {
        const HodgeValueKey key{kind, i, k};
        suite.record(IdentityReport::make("recursive value equals closed form", key.to_string(),
                                          recursive_value(key, memo, base), closed_form(key)));
      }
    }
  }
  return suite;
}

SuiteResult run_localization_suite(int max_k) {
  SuiteResult suite("localization-vanishing");
  for (Family family : {Family::A, Family::B}) {
    const char* label = family == Family::A ? "A" : "B";
    for (int k = family == Family::A ? 6 : 4; k <= max_k; k += 2) {
      for (int i = 0; i <= (k - 2) / 2; ++i) {
        suite.record(IdentityReport::make(std::string("auxiliary integral I_") + label + " vanishes",
                                          "k=" + std::to_string(k) + " i=" + std::to_string(i),
                                          auxiliary_integral(family, k, i), LaurentPolynomial()));
      }
    }
  }
  return suite;
}

SuiteResult run_localization_recursion_suite(int max_k, const BaseValues& base) {
  SuiteResult suite("localization-vs-recursive");
  MemoTable memo;
  for (Family family : {Family::A, Family::B}) {
    const HodgeKind kind = family == Family::A ? HodgeKind::Twisted : HodgeKind::Paired;
    for (int k = family == Family::A ? 6 : 4; k <= max_k; k += 2) {
      for (int i = 1; i <= (k - 2) / 2; ++i) {
        const HodgeValueKey key{kind, i, k};
        suite.record(IdentityReport::make("value isolated from localization equals recursion", key.to_string(),
                                          value_from_localization(family, k, i), recursive_value(key, memo, base)));
      }
    }
  }
  return suite;
}

}  // namespace hyperhodge
