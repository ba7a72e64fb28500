// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hyperhodge/hodge_values.hpp"
#include "hyperhodge/identities.hpp"
#include "hyperhodge/localization.hpp"
#include "hyperhodge/suites.hpp"

namespace {

using namespace hyperhodge;
using Clock = std::chrono::steady_clock;

constexpr int kOracleMaxK = 40;
constexpr double kOracleSeconds = 10.0;
constexpr int kLocalizationMaxK = 20;
constexpr double kLocalizationSeconds = 30.0;
constexpr double kIdentitySeconds = 30.0;

struct Verdict {
  bool pass;
  std::string detail;
};

Rational half() { return Rational(BigInt(1), BigInt(2)); }

Verdict base_values() {
  int checked = 0;
  if (closed_D(1, 4) != Rational(BigInt(1), BigInt(4))) return {false, "closed_D(1,4) = " + closed_D(1, 4).to_string()};
  ++checked;
  for (int k = 4; k <= kOracleMaxK; k += 2) {
    if (closed_D(0, k) != half()) return {false, "closed_D(0," + std::to_string(k) + ") != 1/2"};
    if (closed_d(0, k) != half()) return {false, "closed_d(0," + std::to_string(k) + ") != 1/2"};
    checked += 2;
  }
  return {true, std::to_string(checked) + " values exact"};
}

Verdict cross_oracle() {
  MemoTable memo;
  int checked = 0;
  for (HodgeKind kind : {HodgeKind::Twisted, HodgeKind::Paired}) {
    for (int k = 4; k <= kOracleMaxK; k += 2) {
      for (int i = 0; i <= (k - 2) / 2; ++i) {
        const HodgeValueKey key{kind, i, k};
        const Rational recursive = recursive_value(key, memo);
        const Rational closed = closed_form(key);
        if (recursive != closed)
          return {false, key.to_string() + ": recursive " + recursive.to_string() + " vs closed " + closed.to_string()};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " values, k <= " + std::to_string(kOracleMaxK)};
}

Verdict localization_vanishing() {
  int checked = 0;
  for (Family family : {Family::A, Family::B}) {
    for (int k = family == Family::A ? 6 : 4; k <= kLocalizationMaxK; k += 2) {
      for (int i = 0; i <= (k - 2) / 2; ++i) {
        const LaurentPolynomial value = auxiliary_integral(family, k, i);
        if (!value.is_zero())
          return {false, std::string(family == Family::A ? "A" : "B") + " k=" + std::to_string(k) +
                             " i=" + std::to_string(i) + ": " + value.to_string()};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " integrals identically zero"};
}

Verdict identity_suite() {
  IdentitySuiteOptions options;
  options.max_g = 50;
  options.max_m = 60;
  options.max_n = 10;
  options.draws_per_n = 100;
  options.hat_max_g = 20;
  long passed = 0;
  for (const auto& suite : run_identity_suites(options)) {
    if (suite.name == "boundary-cases") continue;
    if (!suite.ok()) return {false, suite.name + ":\n" + suite.first_failure->render()};
    passed += suite.passed;
  }
  return {true, std::to_string(passed) + " checks"};
}

Verdict boundary_cases() {
  if (alternating_power_sum(1, 1) != Rational(-1))
    return {false, "alternating_power_sum(1,1) = " + alternating_power_sum(1, 1).to_string()};
  if (p_polynomial(1) != DensePolynomial::monomial(Rational(1), 1))
    return {false, "P(1) = " + p_polynomial(1).to_string()};
  return {true, "alternating_power_sum(1,1) = -1, P(1) = t"};
}

struct Process {
  int code;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string command = std::string("\"") + HYPERHODGE_CLI_PATH + "\" " + args + " 2>/dev/null";
  Process result{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

using Row = std::tuple<std::string, int, int, std::string, std::string>;

std::vector<Row> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kind, i, k, num, den;
    std::getline(fields, kind, ',');
    std::getline(fields, i, ',');
    std::getline(fields, k, ',');
    std::getline(fields, num, ',');
    std::getline(fields, den, ',');
    rows.emplace_back(kind, std::stoi(i), std::stoi(k), num, den);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<Row> json_rows(const std::string& text) {
  std::vector<Row> rows;
  for (const auto& obj : nlohmann::json::parse(text))
    rows.emplace_back(obj.at("kind").get<std::string>(), obj.at("i").get<int>(), obj.at("k").get<int>(),
                      obj.at("num").get<std::string>(), obj.at("den").get<std::string>());
  std::sort(rows.begin(), rows.end());
  return rows;
}

Verdict cli_contract() {
  const auto verify = run_cli("verify");
  if (verify.code != 0) return {false, "verify exited " + std::to_string(verify.code)};
  const auto corrupt = run_cli("verify --corrupt-base D,1,4=1/3");
  if (corrupt.code != 1) return {false, "fault-injected verify exited " + std::to_string(corrupt.code)};
  const auto odd = run_cli("table --max-k 5");
  if (odd.code != 2) return {false, "table --max-k 5 exited " + std::to_string(odd.code)};
  const auto csv = run_cli("table --max-k 20 --format csv");
  const auto json = run_cli("table --max-k 20 --format json");
  if (csv.code != 0 || json.code != 0) return {false, "table export failed"};
  const auto a = csv_rows(csv.out);
  const auto b = json_rows(json.out);
  if (a.empty() || a != b) return {false, "CSV and JSON rows differ"};
  return {true, "exit codes 0/1/2, " + std::to_string(a.size()) + " rows round-trip"};
}

struct Criterion {
  std::string name;
  std::function<Verdict()> check;
  double limit_seconds;  // 0 for no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"base values", base_values, 0},
      {"closed form vs recursion, k <= 40", cross_oracle, kOracleSeconds},
      {"localization integrals vanish, k <= 20", localization_vanishing, kLocalizationSeconds},
      {"identity suite", identity_suite, kIdentitySeconds},
      {"boundary cases", boundary_cases, 0},
      {"CLI contract", cli_contract, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v{false, ""};
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (v.pass && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      v.pass = false;
      v.detail += "; exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << timing << ")  " << v.detail << "\n";
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
