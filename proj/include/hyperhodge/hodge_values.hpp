#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperhodge/rational.hpp"

namespace hyperhodge {

// Which family of linear hyperelliptic Hodge integrals a value belongs to.
//
//   Twisted ('D'): integral of psi^(k-3-i) lambda_i over M_{0,kt}(BZ_2), i.e.
//                  over the hyperelliptic locus with its 2g+2 Weierstrass points.
//   Paired  ('d'): integral of psi^(k-2-i) lambda_i over M_{0,kt,1u}(BZ_2),
//                  psi taken at the untwisted point, whose preimage is a
//                  conjugate pair on the genus g cover.
//
// k counts twisted points and the cover has genus g = (k-2)/2. The psi
// exponents make each integrand top degree: dim M_{0,kt} = k-3 and
// dim M_{0,kt,1u} = k-2.
enum class HodgeKind { Twisted, Paired };

char symbol(HodgeKind kind);
// Accepts 'D' or 'd'; throws std::invalid_argument otherwise.
HodgeKind parse_kind(char c);

struct HodgeValueKey {
  HodgeKind kind = HodgeKind::Twisted;
  int i = 0;  // lambda index
  int k = 2;  // number of twisted points, even

  int genus() const { return (k - 2) / 2; }
  // True when k is even, k >= 2 and i >= 0. Keys with i > genus() are valid
  // and always evaluate to zero.
  bool is_valid() const;
  std::string to_string() const;  // e.g. "D(1,4)"

  // Table order: kind, then k, then i.
  friend std::strong_ordering operator<=>(const HodgeValueKey& a, const HodgeValueKey& b);
  friend bool operator==(const HodgeValueKey&, const HodgeValueKey&) = default;
};

// Closed forms:
//   D_{i,k} = (1/2)^{i+1} e_i(1, 3, ..., k-3)     (k even, k >= 4)
//   d_{i,k} = (1/2)^{i+1} e_i(2, 4, ..., k-2)     (k even, k >= 2)
// Both vanish for i > g. Throws std::domain_error outside those ranges.
Rational closed_D(int i, int k);
Rational closed_d(int i, int k);
Rational closed_form(const HodgeValueKey& key);

// Known values that seed the recursions:
//   D_{0,k} = d_{0,k} = 1/2, D_{1,4} = 1/4, zero for i > g,
// together with the k = 2 convention D_{i,2} = d_{i,2} = (i == 0 ? 1/2 : 0).
// nullopt for anything else, including invalid keys.
std::optional<Rational> base_value(const HodgeValueKey& key);

// Base values with optional per-key replacements. Replacements exist so that
// verification drivers can demonstrate they catch a corrupted seed.
class BaseValues {
 public:
  std::optional<Rational> lookup(const HodgeValueKey& key) const;
  void override_value(const HodgeValueKey& key, const Rational& value);
  bool has_overrides() const { return !overrides_.empty(); }

 private:
  std::map<HodgeValueKey, Rational> overrides_;
};

// Write-once cache of recursively computed values. Readers may run
// concurrently; a second insert of the same key must carry the same value.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<Rational> find(const HodgeValueKey& key) const;
  // Throws std::logic_error if the key holds a different value.
  void insert(const HodgeValueKey& key, const Rational& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<HodgeValueKey, Rational> values_;
};

// Value of `key` from the two localization recursions, resolved bottom-up in
// k through `memo` and `base`. Keys served by `base` are returned directly.
// Throws std::domain_error for invalid keys.
Rational recursive_value(const HodgeValueKey& key, MemoTable& memo, const BaseValues& base = {});
Rational recursive_D(int i, int k, MemoTable& memo, const BaseValues& base = {});
Rational recursive_d(int i, int k, MemoTable& memo, const BaseValues& base = {});

// A closed-vs-recursive disagreement.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(HodgeValueKey key, Rational closed, Rational recursive);
  const HodgeValueKey& key() const { return key_; }
  const Rational& closed() const { return closed_; }
  const Rational& recursive() const { return recursive_; }

 private:
  HodgeValueKey key_;
  Rational closed_;
  Rational recursive_;
};

struct TableRow {
  HodgeValueKey key;
  Rational value;
};

// Every D and d value for 4 <= k <= max_k and 0 <= i <= g, in table order,
// each computed both in closed form and recursively. Throws
// VerificationError on the first disagreement and std::domain_error unless
// max_k is even and >= 4.
std::vector<TableRow> table(int max_k, const BaseValues& base = {});

// Source of vertex values for the localization engine.
using HodgeSource = std::function<Rational(const HodgeValueKey&)>;

HodgeSource closed_source();
// Reads through `memo`, filling it recursively on a miss.
HodgeSource recursive_source(MemoTable& memo, const BaseValues& base = {});

}  // namespace hyperhodge
