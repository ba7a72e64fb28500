#include "hyperhodge/hodge_values.hpp"

#include <mutex>
#include <sstream>

#include "hyperhodge/combinatorics.hpp"
#include "hyperhodge/symfun.hpp"

namespace hyperhodge {

namespace {

const Rational kHalf(BigInt(1), BigInt(2));

void require_valid(const HodgeValueKey& key) {
  if (!key.is_valid()) throw std::domain_error("invalid Hodge value key " + key.to_string());
}

Rational scaled_elementary(int i, const ValueSet& values) {
  return kHalf.pow(i + 1) * elementary(static_cast<std::size_t>(i), values);
}

// sum_{l=0}^{i} (-1)^l v(kind, i-l, k1) v(kind, l, k2)
template <typename Lookup>
Rational split_sum(const Lookup& value, HodgeKind kind, int i, int k1, int k2) {
  Rational acc;
  for (int l = 0; l <= i; ++l) {
    const Rational right = value({kind, l, k2});
    if (right.is_zero()) continue;
    const Rational term = value({kind, i - l, k1}) * right;
    if (l % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// D_{i,k} = 2 sum_{j odd, 1..k-3} C(k-3,j) sum_l (-1)^l d_{i-l,k-1-j} d_{l,j+1}
//         - 2 sum_{j even, 2..k-4} C(k-3,j) sum_l (-1)^l D_{i-l,k-j} D_{l,j+2}
template <typename Lookup>
Rational twisted_step(const Lookup& value, int i, int k) {
  Rational acc;
  for (int j = 1; j <= k - 3; j += 2)
    acc += Rational(binomial(k - 3, j)) * split_sum(value, HodgeKind::Paired, i, k - 1 - j, j + 1);
  for (int j = 2; j <= k - 4; j += 2)
    acc -= Rational(binomial(k - 3, j)) * split_sum(value, HodgeKind::Twisted, i, k - j, j + 2);
  return Rational(2) * acc;
}

// d_{i,k} = 2 sum_{j odd, 1..k-3} C(k-2,j) sum_l (-1)^l D_{i-l,k-j+1} D_{l,j+1}
//         - 2 sum_{j even, 2..k-2} C(k-2,j) sum_l (-1)^l d_{i-l,k-j} d_{l,j}
template <typename Lookup>
Rational paired_step(const Lookup& value, int i, int k) {
  Rational acc;
  for (int j = 1; j <= k - 3; j += 2)
    acc += Rational(binomial(k - 2, j)) * split_sum(value, HodgeKind::Twisted, i, k - j + 1, j + 1);
  for (int j = 2; j <= k - 2; j += 2)
    acc -= Rational(binomial(k - 2, j)) * split_sum(value, HodgeKind::Paired, i, k - j, j);
  return Rational(2) * acc;
}

// Fills every recursively defined key with 4 <= k' <= k. Within one k the
// twisted values go first, since the paired recursion reads D_{i,k}.
void fill_through(int k, MemoTable& memo, const BaseValues& base) {
  const auto lookup = [&](const HodgeValueKey& key) -> Rational {
    if (auto b = base.lookup(key)) return *b;
    if (auto m = memo.find(key)) return *m;
    throw std::logic_error("recursion reached unfilled key " + key.to_string());
  };
  for (int kk = 4; kk <= k; kk += 2) {
    const int g = (kk - 2) / 2;
    for (HodgeKind kind : {HodgeKind::Twisted, HodgeKind::Paired}) {
      for (int i = 1; i <= g; ++i) {
        const HodgeValueKey key{kind, i, kk};
        if (base.lookup(key) || memo.find(key)) continue;
        memo.insert(key, kind == HodgeKind::Twisted ? twisted_step(lookup, i, kk) : paired_step(lookup, i, kk));
      }
    }
  }
}

std::string describe_mismatch(const HodgeValueKey& key, const Rational& closed, const Rational& recursive) {
  std::ostringstream os;
  os << "closed/recursive mismatch at " << key.to_string() << ": closed = " << closed
     << ", recursive = " << recursive;
  return os.str();
}

}  // namespace

char symbol(HodgeKind kind) { return kind == HodgeKind::Twisted ? 'D' : 'd'; }

HodgeKind parse_kind(char c) {
  if (c == 'D') return HodgeKind::Twisted;
  if (c == 'd') return HodgeKind::Paired;
  throw std::invalid_argument(std::string("unknown Hodge kind '") + c + "'");
}

bool HodgeValueKey::is_valid() const { return k >= 2 && k % 2 == 0 && i >= 0; }

std::string HodgeValueKey::to_string() const {
  return std::string(1, symbol(kind)) + "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

std::strong_ordering operator<=>(const HodgeValueKey& a, const HodgeValueKey& b) {
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
  if (auto c = a.k <=> b.k; c != 0) return c;
  return a.i <=> b.i;
}

Rational closed_D(int i, int k) {
  if (k < 4 || k % 2 != 0 || i < 0)
    throw std::domain_error("closed_D needs even k >= 4 and i >= 0, got i=" + std::to_string(i) +
                            " k=" + std::to_string(k));
  return scaled_elementary(i, odd_values(static_cast<std::size_t>((k - 2) / 2)));
}

Rational closed_d(int i, int k) {
  if (k < 2 || k % 2 != 0 || i < 0)
    throw std::domain_error("closed_d needs even k >= 2 and i >= 0, got i=" + std::to_string(i) +
                            " k=" + std::to_string(k));
  return scaled_elementary(i, even_values(static_cast<std::size_t>((k - 2) / 2)));
}

Rational closed_form(const HodgeValueKey& key) {
  return key.kind == HodgeKind::Twisted ? closed_D(key.i, key.k) : closed_d(key.i, key.k);
}

std::optional<Rational> base_value(const HodgeValueKey& key) {
  if (!key.is_valid()) return std::nullopt;
  if (key.i > key.genus()) return Rational();
  if (key.i == 0) return kHalf;
  if (key.kind == HodgeKind::Twisted && key.i == 1 && key.k == 4) return Rational(BigInt(1), BigInt(4));
  return std::nullopt;
}

std::optional<Rational> BaseValues::lookup(const HodgeValueKey& key) const {
  if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
  return base_value(key);
}

void BaseValues::override_value(const HodgeValueKey& key, const Rational& value) { overrides_[key] = value; }

std::optional<Rational> MemoTable::find(const HodgeValueKey& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  return std::nullopt;
}

void MemoTable::insert(const HodgeValueKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.try_emplace(key, value);
  if (!inserted && it->second != value)
    throw std::logic_error("MemoTable: conflicting write for " + key.to_string() + " (" + it->second.to_string() +
                           " vs " + value.to_string() + ")");
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

Rational recursive_value(const HodgeValueKey& key, MemoTable& memo, const BaseValues& base) {
  require_valid(key);
  if (auto b = base.lookup(key)) return *b;
  if (auto m = memo.find(key)) return *m;
  fill_through(key.k, memo, base);
  return *memo.find(key);
}

Rational recursive_D(int i, int k, MemoTable& memo, const BaseValues& base) {
  return recursive_value({HodgeKind::Twisted, i, k}, memo, base);
}

Rational recursive_d(int i, int k, MemoTable& memo, const BaseValues& base) {
  return recursive_value({HodgeKind::Paired, i, k}, memo, base);
}

VerificationError::VerificationError(HodgeValueKey key, Rational closed, Rational recursive)
    : std::runtime_error(describe_mismatch(key, closed, recursive)),
      key_(key),
      closed_(std::move(closed)),
      recursive_(std::move(recursive)) {}

std::vector<TableRow> table(int max_k, const BaseValues& base) {
  if (max_k < 4 || max_k % 2 != 0) throw std::domain_error("table needs an even max_k >= 4");
  MemoTable memo;
  fill_through(max_k, memo, base);
  std::vector<TableRow> rows;
  for (HodgeKind kind : {HodgeKind::Twisted, HodgeKind::Paired}) {
    for (int k = 4; k <= max_k; k += 2) {
      for (int i = 0; i <= (k - 2) / 2; ++i) {
        const HodgeValueKey key{kind, i, k};
        Rational closed = closed_form(key);
        Rational recursive = recursive_value(key, memo, base);
        if (closed != recursive) throw VerificationError(key, std::move(closed), std::move(recursive));
        rows.push_back({key, std::move(closed)});
      }
    }
  }
  return rows;
}

HodgeSource closed_source() { return [](const HodgeValueKey& key) { return closed_form(key); }; }

HodgeSource recursive_source(MemoTable& memo, const BaseValues& base) {
  return [&memo, base](const HodgeValueKey& key) { return recursive_value(key, memo, base); };
}

}  // namespace hyperhodge
