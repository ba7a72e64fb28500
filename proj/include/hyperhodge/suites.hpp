#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperhodge/hodge_values.hpp"
#include "hyperhodge/identities.hpp"

namespace hyperhodge {

struct SuiteResult {
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> notes;
  std::optional<IdentityReport> first_failure;

  bool ok() const { return failed == 0; }
  void record(IdentityReport report);
  void merge(const SuiteResult& other);
};

struct IdentitySuiteOptions {
  int max_g = 50;       // P, Q, eqn sweeps
  int max_m = 60;       // alternating power sums, 0 <= p < m <= max_m
  int max_n = 10;       // product sums over n = 1..max_n values
  int draws_per_n = 100;
  int hat_max_g = 20;   // hat-transform root checks
  std::uint64_t seed = 0x5eed;
};

IdentitySuiteOptions identity_options_for(int max_g);

// One SuiteResult per identity family, followed by the documented boundary
// cases (where a literal reading of the identity fails).
std::vector<SuiteResult> run_identity_suites(const IdentitySuiteOptions& options);

// closed_form == recursive_value for every key with 4 <= k <= max_k.
SuiteResult run_recursion_suite(int max_k, const BaseValues& base = {});

// auxiliary_integral == 0 for A (6 <= k <= max_k) and B (4 <= k <= max_k).
SuiteResult run_localization_suite(int max_k);

// value_from_localization == recursive_value for the same keys.
SuiteResult run_localization_recursion_suite(int max_k, const BaseValues& base = {});

// Small rationals for property checks: numerator in [-50, 50],
// denominator in [1, 20].
Rational random_rational(std::mt19937_64& rng);

}  // namespace hyperhodge
