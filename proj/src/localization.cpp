#include "hyperhodge/localization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperhodge/combinatorics.hpp"

namespace hyperhodge {

namespace {

struct InsertionPoint {
  int label;
  Side side;
};

std::vector<InsertionPoint> insertion_points(Family family) {
  if (family == Family::A) return {{1, Side::Zero}, {2, Side::Zero}, {3, Side::Infinity}};
  return {{1, Side::Zero}, {2, Side::Zero}};
}

void require_family_range(Family family, int k) {
  const int min_k = family == Family::A ? 6 : 4;
  if (k < min_k || k % 2 != 0)
    throw std::domain_error(std::string("family ") + (family == Family::A ? "A" : "B") + " needs even k >= " +
                            std::to_string(min_k) + ", got " + std::to_string(k));
}

// sum_m psi^m / (s t)^{m+1}, truncated at the vertex dimension and paired
// with lambda_b. Degenerate vertices only see lambda_0 = 1.
LaurentPolynomial vertex_series(const VertexModuli& v, int lambda_index, const HodgeSource& source) {
  if (!v.contracted()) return lambda_index == 0 ? LaurentPolynomial(Rational(1)) : LaurentPolynomial();
  const Rational s(v.side == Side::Zero ? 1 : -1);
  LaurentPolynomial out;
  for (int m = 0; m <= v.dimension(); ++m) {
    const Rational integral = vertex_integral(v.twisted, v.untwisted, m, lambda_index, source);
    if (integral.is_zero()) continue;
    out += LaurentPolynomial::monomial(integral * s.pow(m + 1), -(m + 1));
  }
  return out;
}

}  // namespace

LocalizationGraph::LocalizationGraph(int k, std::vector<int> over_zero, std::vector<int> over_infinity)
    : k_(k), over_zero_(std::move(over_zero)), over_infinity_(std::move(over_infinity)) {
  if (k_ < 1) throw std::domain_error("LocalizationGraph: k must be positive");
  std::sort(over_zero_.begin(), over_zero_.end());
  std::sort(over_infinity_.begin(), over_infinity_.end());
  std::vector<bool> seen(static_cast<std::size_t>(k_) + 1, false);
  for (const auto* labels : {&over_zero_, &over_infinity_}) {
    for (int label : *labels) {
      if (label < 1 || label > k_) throw std::domain_error("LocalizationGraph: label out of range");
      if (seen[static_cast<std::size_t>(label)]) throw std::domain_error("LocalizationGraph: repeated label");
      seen[static_cast<std::size_t>(label)] = true;
    }
  }
  if (over_zero_.size() + over_infinity_.size() != static_cast<std::size_t>(k_))
    throw std::domain_error("LocalizationGraph: labels do not cover 1..k");
}

LocalizationGraph LocalizationGraph::from_zero_labels(int k, std::vector<int> over_zero) {
  std::vector<int> over_infinity;
  for (int label = 1; label <= k; ++label)
    if (std::find(over_zero.begin(), over_zero.end(), label) == over_zero.end()) over_infinity.push_back(label);
  return LocalizationGraph(k, std::move(over_zero), std::move(over_infinity));
}

int LocalizationGraph::half_edges(Side side) const {
  return static_cast<int>(side == Side::Zero ? over_zero_.size() : over_infinity_.size());
}

bool LocalizationGraph::lies_over(int label, Side side) const {
  const auto& labels = side == Side::Zero ? over_zero_ : over_infinity_;
  return std::binary_search(labels.begin(), labels.end(), label);
}

std::pair<VertexModuli, VertexModuli> vertex_moduli_of(const LocalizationGraph& graph) {
  const auto describe = [&](Side side) {
    VertexModuli v;
    v.side = side;
    v.half_edges = graph.half_edges(side);
    if (v.contracted()) {
      if (v.half_edges % 2 == 1) {
        v.twisted = v.half_edges + 1;
      } else {
        v.twisted = v.half_edges;
        v.untwisted = 1;
      }
    }
    return v;
  };
  return {describe(Side::Zero), describe(Side::Infinity)};
}

Rational gluing_factor(const LocalizationGraph& graph) {
  const auto [zero, infinity] = vertex_moduli_of(graph);
  const int nodes = (zero.contracted() ? 1 : 0) + (infinity.contracted() ? 1 : 0);
  return Rational(2).pow(nodes - 1);
}

Rational vertex_integral(int twisted, int untwisted, int psi_power, int lambda_index, const HodgeSource& source) {
  if (untwisted != 0 && untwisted != 1) throw std::domain_error("vertex_integral: untwisted must be 0 or 1");
  const int dimension = twisted - 3 + untwisted;
  if (psi_power < 0 || lambda_index < 0 || psi_power + lambda_index != dimension) return Rational();
  return source({untwisted == 0 ? HodgeKind::Twisted : HodgeKind::Paired, lambda_index, twisted});
}

FamilyClass enumerate_family(Family family, int k, int j) {
  require_family_range(family, k);
  const int max_j = family == Family::A ? k - 3 : k - 2;
  if (j < 0 || j > max_j)
    throw std::domain_error("enumerate_family: j=" + std::to_string(j) + " outside 0.." + std::to_string(max_j));

  // Canonical labelling: the infinity side takes the smallest free labels.
  std::vector<int> over_zero{1, 2};
  std::vector<int> over_infinity;
  int next = 3;
  if (family == Family::A) over_infinity.push_back(next++);
  for (int n = 0; n < j; ++n) over_infinity.push_back(next++);
  while (next <= k) over_zero.push_back(next++);

  const long free_points = family == Family::A ? k - 3 : k - 2;
  return {family, k, j, LocalizationGraph(k, std::move(over_zero), std::move(over_infinity)),
          binomial(free_points, j)};
}

int family_size(Family family, int k) { return family == Family::A ? k - 2 : k - 1; }

std::optional<int> family_index(const LocalizationGraph& graph, Family family) {
  for (const auto& point : insertion_points(family))
    if (point.label > graph.k() || !graph.lies_over(point.label, point.side)) return std::nullopt;
  return graph.half_edges(Side::Infinity) - (family == Family::A ? 1 : 0);
}

long contribution_exponent(Family family, int k, int i) { return i - (family == Family::A ? k - 3 : k - 2); }

LaurentPolynomial graph_contribution(const LocalizationGraph& graph, const BigInt& multiplicity, Family insertion,
                                     int i, const HodgeSource& source) {
  if (!family_index(graph, insertion))
    throw std::domain_error("graph_contribution: marked points do not match the insertion pattern");
  if (i < 0) throw std::domain_error("graph_contribution: negative lambda index");

  // ev^*(0) -> t, ev^*(inf) -> -t
  Rational prefactor{multiplicity};
  long t_power = 0;
  for (const auto& point : insertion_points(insertion)) {
    if (point.side == Side::Infinity) prefactor = -prefactor;
    ++t_power;
  }

  const auto [zero, infinity] = vertex_moduli_of(graph);
  prefactor *= gluing_factor(graph);
  if (zero.half_edges == 0) ++t_power;
  if (infinity.half_edges == 0) {
    prefactor = -prefactor;
    ++t_power;
  }
  // central edge: 1 / (-t^2)
  prefactor = -prefactor;
  t_power -= 2;

  LaurentPolynomial split;
  for (int i1 = 0; i1 <= i; ++i1)
    split += vertex_series(zero, i1, source) * vertex_series(infinity, i - i1, source);

  return LaurentPolynomial::monomial(prefactor, t_power) * split;
}

LaurentPolynomial family_contribution(const FamilyClass& cls, int i, const HodgeSource& source) {
  return graph_contribution(cls.representative, cls.multiplicity, cls.family, i, source);
}

LaurentPolynomial auxiliary_integral(Family family, int k, int i, const HodgeSource& source) {
  require_family_range(family, k);
  std::vector<LaurentPolynomial> terms;
  for (int j = 0; j < family_size(family, k); ++j)
    terms.push_back(family_contribution(enumerate_family(family, k, j), i, source));
  return laurent_sum(terms);
}

Rational value_from_localization(Family family, int k, int i, const HodgeSource& source) {
  require_family_range(family, k);
  LaurentPolynomial rest;
  for (int j = 1; j < family_size(family, k); ++j) rest += family_contribution(enumerate_family(family, k, j), i, source);
  return -rest.coefficient(contribution_exponent(family, k, i));
}

}  // namespace hyperhodge
