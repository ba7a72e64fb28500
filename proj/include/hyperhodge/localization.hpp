#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperhodge/hodge_values.hpp"
#include "hyperhodge/laurent_polynomial.hpp"
#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// Torus-fixed loci of M_{0,kt}(P^1 x BZ_2, 1). A degree-1 map has a single
// non-contracted component (the central edge) joining the vertex over 0 to
// the vertex over infinity; the marked points are split between the two.
//
// The equivariant parameter t enters as follows. A marked point restricted
// to the fixed locus evaluates to t over 0 and -t over infinity, and
//
//   1/e(N) = 2^{#contracted vertices} (1/2) prod_{bare vertex over 0} t
//            prod_{bare vertex over inf} (-t)
//            / ( (-t^2) prod_{contracted over 0} (t - psi)
//                       prod_{contracted over inf} (-t - psi) )
//
// where a vertex is contracted when it carries at least two marked points
// (valence >= 3) and bare when it carries none (valence 1). A vertex with
// exactly one marked point contributes nothing.

enum class Side { Zero, Infinity };

// Insertion patterns for the two auxiliary integrals, both of which vanish
// for dimension reasons:
//   A: ev_1^*(0) ev_2^*(0) ev_3^*(inf) lambda_i   (k >= 6)
//   B: ev_1^*(0) ev_2^*(0) lambda_i               (k >= 4)
enum class Family { A, B };

class LocalizationGraph {
 public:
  // Labels must be distinct, lie in 1..k, and cover 1..k exactly once.
  // Throws std::domain_error otherwise.
  LocalizationGraph(int k, std::vector<int> over_zero, std::vector<int> over_infinity);

  // Every label not in `over_zero` goes to infinity.
  static LocalizationGraph from_zero_labels(int k, std::vector<int> over_zero);

  int k() const { return k_; }
  const std::vector<int>& over_zero() const { return over_zero_; }
  const std::vector<int>& over_infinity() const { return over_infinity_; }
  int half_edges(Side side) const;
  // Half-edges plus the central edge.
  int valence(Side side) const { return half_edges(side) + 1; }
  bool lies_over(int label, Side side) const;

 private:
  int k_;
  std::vector<int> over_zero_;
  std::vector<int> over_infinity_;
};

// The moduli space attached to one vertex. With n marked points at the
// vertex, the node is twisted when n is odd (M_{0,(n+1)t}) and untwisted
// when n is even (M_{0,nt,1u}). Vertices with n <= 1 carry no contracted
// component and are degenerate.
struct VertexModuli {
  Side side = Side::Zero;
  int half_edges = 0;
  int twisted = 0;    // includes the node when it is twisted
  int untwisted = 0;  // 0 or 1

  bool contracted() const { return half_edges >= 2; }
  int dimension() const { return twisted - 3 + untwisted; }
};

std::pair<VertexModuli, VertexModuli> vertex_moduli_of(const LocalizationGraph& graph);

// 2^{#contracted vertices} * 1/2.
Rational gluing_factor(const LocalizationGraph& graph);

// int psi^psi_power lambda_lambda_index over M_{0,(twisted)t,(untwisted)u}(BZ_2),
// psi taken at the node. Zero off the top degree.
Rational vertex_integral(int twisted, int untwisted, int psi_power, int lambda_index,
                         const HodgeSource& source = closed_source());

// One class A_j^k or B_j^k: a canonical labelled representative and the
// number of labellings it stands for.
struct FamilyClass {
  Family family = Family::A;
  int k = 0;
  int j = 0;
  LocalizationGraph representative;
  BigInt multiplicity;
};

// A_j^k: points 1,2 over 0, point 3 and j further points over infinity,
//        0 <= j <= k-3, C(k-3, j) labellings.
// B_j^k: points 1,2 over 0, j points over infinity, 0 <= j <= k-2,
//        C(k-2, j) labellings.
// Throws std::domain_error on an out-of-range k or j.
FamilyClass enumerate_family(Family family, int k, int j);
int family_size(Family family, int k);  // number of j values

// j if the graph belongs to the family's insertion pattern, else nullopt.
std::optional<int> family_index(const LocalizationGraph& graph, Family family);

// The t^{i-(k-3)} (A) or t^{i-(k-2)} (B) exponent every contribution sits at.
long contribution_exponent(Family family, int k, int i);

// multiplicity * (insertion restricted to the fixed locus) * integral of
// lambda_i / e(N) over the vertex moduli, as a Laurent polynomial in t.
// Throws std::domain_error if the graph does not fit the insertion pattern.
LaurentPolynomial graph_contribution(const LocalizationGraph& graph, const BigInt& multiplicity,
                                     Family insertion, int i, const HodgeSource& source = closed_source());

LaurentPolynomial family_contribution(const FamilyClass& cls, int i, const HodgeSource& source = closed_source());

// Sum of every family class. Vanishes identically.
LaurentPolynomial auxiliary_integral(Family family, int k, int i, const HodgeSource& source = closed_source());

// The j = 0 class contributes exactly D_{i,k} (A) or d_{i,k} (B) at the
// common exponent; solving the vanishing sum for it gives that value from
// the remaining classes alone.
Rational value_from_localization(Family family, int k, int i, const HodgeSource& source = closed_source());

}  // namespace hyperhodge
