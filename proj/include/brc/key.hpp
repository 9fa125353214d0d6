#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "brc/checked.hpp"
#include "brc/element.hpp"

namespace brc {

// Subset-enumerating operations refuse key sets larger than this by default.
inline constexpr std::size_t kDefaultSubsetCap = 20;

// Finite non-empty set of distinct positive representation indices.
class KeySet {
 public:
  explicit KeySet(std::vector<Index> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw DomainError("key set must be non-empty");
    std::sort(indices_.begin(), indices_.end());
    if (indices_.front() == 0) throw DomainError("key indices must be positive");
    auto dup = std::adjacent_find(indices_.begin(), indices_.end());
    if (dup != indices_.end()) throw DomainError("duplicate key index " + std::to_string(*dup));
  }
  KeySet(std::initializer_list<Index> indices) : KeySet(std::vector<Index>(indices)) {}

  // Sorted ascending.
  const std::vector<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  Index max() const { return indices_.back(); }
  bool contains(Index s) const { return std::binary_search(indices_.begin(), indices_.end(), s); }

  friend bool operator==(const KeySet&, const KeySet&) = default;
  friend auto operator<=>(const KeySet&, const KeySet&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(indices_[i]);
    }
    return out + "}";
  }

 private:
  std::vector<Index> indices_;
};

// Basic degree of the m-th irreducible O(2)-representation:
// O2 for the trivial representation, O2 - D(m) otherwise.
inline BurnsideElement basic_degree(Index m) {
  if (m == 0) return BurnsideElement::one();
  return BurnsideElement{{Generator::o2(), 1}, {Generator::dihedral(m), -1}};
}

// k_S, the Burnside product of the basic degrees indexed by S.
inline BurnsideElement key_element(const KeySet& s) {
  BurnsideElement k = BurnsideElement::one();
  for (Index m : s.indices()) k *= basic_degree(m);
  return k;
}

namespace detail {

inline void check_cap(const KeySet& s, std::size_t cap) {
  if (s.size() > cap) {
    throw DomainError("key set of size " + std::to_string(s.size()) + " exceeds subset enumeration cap " +
                      std::to_string(cap));
  }
}

// (-2)^e for small e, checked.
inline Coeff neg_two_pow(std::size_t e) {
  Coeff r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked::mul(r, -2);
  return r;
}

// Calls visit(gcd(I), |I|) for every subset I of s with |I| >= 2.
template <typename Visit>
void for_each_multi_subset(const KeySet& s, Visit&& visit) {
  const auto& idx = s.indices();
  const std::size_t n = idx.size();
  // Depth-first over subsets carrying the running gcd.
  auto rec = [&](auto&& self, std::size_t start, Index g, std::size_t size) -> void {
    for (std::size_t i = start; i < n; ++i) {
      Index ng = size == 0 ? idx[i] : std::gcd(g, idx[i]);
      if (size + 1 >= 2) visit(ng, size + 1);
      self(self, i + 1, ng, size + 1);
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace detail

// Coefficient of D(s0) in k_S, by direct enumeration of subsets of S:
//   -[s0 in S] + 2 * sum over I, |I| >= 2, gcd(I) = s0, of (-2)^(|I|-2).
inline Coeff alpha(const KeySet& s, Index s0, std::size_t cap = kDefaultSubsetCap) {
  if (s0 == 0) throw DomainError("alpha: index must be >= 1");
  detail::check_cap(s, cap);
  Coeff sum = 0;
  detail::for_each_multi_subset(s, [&](Index g, std::size_t size) {
    if (g == s0) sum = checked::add(sum, detail::neg_two_pow(size - 2));
  });
  return checked::sub(checked::mul(2, sum), s.contains(s0) ? 1 : 0);
}

// All nonzero alpha values at once, keyed by dihedral index.
inline std::map<Index, Coeff> alpha_table(const KeySet& s, std::size_t cap = kDefaultSubsetCap) {
  detail::check_cap(s, cap);
  std::map<Index, Coeff> sums;
  detail::for_each_multi_subset(s, [&](Index g, std::size_t size) {
    auto& v = sums[g];
    v = checked::add(v, detail::neg_two_pow(size - 2));
  });
  std::map<Index, Coeff> out;
  for (auto& [g, v] : sums) out[g] = checked::mul(2, v);
  for (Index m : s.indices()) out[m] = checked::sub(out[m], 1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// beta_S(x) = sum of alpha_S(n) over multiples n of x. alpha_S vanishes
// above max(S), so the sum is finite.
inline Coeff beta(const KeySet& s, Index x, std::size_t cap = kDefaultSubsetCap) {
  if (x == 0) throw DomainError("beta: index must be >= 1");
  Coeff sum = 0;
  for (const auto& [n, a] : alpha_table(s, cap)) {
    if (n % x == 0) sum = checked::add(sum, a);
  }
  return sum;
}

// Reference value for alpha: expand prod (O2 - D(s_j)) with the ring product
// and read off the D(s0) coefficient.
inline Coeff coeff_bruteforce(const KeySet& s, Index s0, std::size_t cap = kDefaultSubsetCap) {
  if (s0 == 0) throw DomainError("coeff_bruteforce: index must be >= 1");
  detail::check_cap(s, cap);
  BurnsideElement acc = BurnsideElement::one();
  for (Index m : s.indices()) acc = mul(acc, BurnsideElement{{Generator::o2(), 1}, {Generator::dihedral(m), -1}});
  return acc.coeff(Generator::dihedral(s0));
}

}  // namespace brc
