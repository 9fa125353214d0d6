#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brc/element.hpp"
#include "brc/equivariant.hpp"
#include "brc/key.hpp"

// Oracle-equivalence suites behind `brc verify`.
namespace brc::verify {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_counterexample;

  bool ok() const { return failed == 0; }

  void expect(bool cond, const std::function<std::string()>& describe) {
    ++checked;
    if (cond) return;
    if (failed++ == 0) first_counterexample = describe();
  }
};

struct Ranges {
  Index table_max_index = 24;
  Index involution_exhaustive_max_index = 12;
  std::size_t involution_exhaustive_max_size = 3;
  std::size_t involution_samples = 1000;
  std::size_t involution_max_size = 8;
  Index involution_max_index = 100;
  std::size_t coeff_samples = 500;
  std::size_t coeff_max_size = 8;
  Index coeff_max_index = 60;
  Index rf1_max_m = 50;
  std::uint64_t seed = 20251016;
};

// Random key set with 1..max_size distinct indices drawn from 1..max_index.
inline KeySet sample_key_set(std::mt19937_64& rng, std::size_t max_size, Index max_index) {
  std::size_t cap = std::min<std::size_t>(max_size, max_index);
  std::uniform_int_distribution<std::size_t> size_dist(1, cap);
  std::uniform_int_distribution<Index> idx_dist(1, max_index);
  std::size_t n = size_dist(rng);
  std::vector<Index> picked;
  while (picked.size() < n) {
    Index v = idx_dist(rng);
    if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
  }
  return KeySet(std::move(picked));
}

// Every non-empty subset of {1..max_index} with at most max_size elements.
inline void for_each_small_key_set(Index max_index, std::size_t max_size, const std::function<void(const KeySet&)>& f) {
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index start) -> void {
    for (Index v = start; v <= max_index; ++v) {
      cur.push_back(v);
      f(KeySet(cur));
      if (cur.size() < max_size) self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

inline std::vector<Generator> generators_up_to(Index max_index) {
  std::vector<Generator> out;
  for (Index k = 1; k <= max_index; ++k) out.push_back(Generator::dihedral(k));
  out.push_back(Generator::so2());
  out.push_back(Generator::o2());
  return out;
}

// The multiplication table entry for a pair of generators, spelled out case
// by case.
inline BurnsideElement table_entry(const Generator& a, const Generator& b) {
  using K = Generator::Kind;
  const auto ka = a.kind();
  const auto kb = b.kind();
  if (ka == K::O2 && kb == K::O2) return Generator::o2();
  if (ka == K::O2 && kb == K::SO2) return Generator::so2();
  if (ka == K::O2 && kb == K::Dihedral) return b;
  if (ka == K::SO2 && kb == K::O2) return Generator::so2();
  if (ka == K::SO2 && kb == K::SO2) return BurnsideElement{{Generator::so2(), 2}};
  if (ka == K::SO2 && kb == K::Dihedral) return {};
  if (ka == K::Dihedral && kb == K::O2) return a;
  if (ka == K::Dihedral && kb == K::SO2) return {};
  return BurnsideElement{{Generator::dihedral(std::gcd(a.index(), b.index())), 2}};
}

inline SuiteResult table(const Ranges& r = {}) {
  SuiteResult res;
  res.name = "table";
  auto lat = o2_lattice(r.table_max_index);
  for (const auto& a : generators_up_to(r.table_max_index)) {
    for (const auto& b : generators_up_to(r.table_max_index)) {
      auto want = table_entry(a, b);
      auto got = mul(a, b);
      res.expect(got == want, [&] { return a.name() + "*" + b.name() + ": mul gave " + to_string(got); });
      auto rec = recurrence_mul(a, b, lat);
      res.expect(rec == want,
                 [&] { return a.name() + "*" + b.name() + ": recurrence gave " + to_string(rec); });
    }
  }
  return res;
}

inline SuiteResult recurrence(const Ranges& r = {}) {
  SuiteResult res;
  res.name = "recurrence";
  auto lat = o2_lattice(r.table_max_index);
  auto v = lat.validate();
  res.expect(v.empty(), [&] { return "lattice fixture invalid: " + v; });
  for (const auto& a : generators_up_to(r.table_max_index)) {
    for (const auto& b : generators_up_to(r.table_max_index)) {
      auto rec = recurrence_mul(a, b, lat);
      auto ring = mul(a, b);
      res.expect(rec == ring, [&] {
        return a.name() + "*" + b.name() + ": recurrence " + to_string(rec) + " vs mul " + to_string(ring);
      });
    }
  }
  return res;
}

inline SuiteResult involution(const Ranges& r = {}) {
  SuiteResult res;
  res.name = "involution";
  auto check = [&](const KeySet& s) {
    auto k = key_element(s);
    auto sq = mul(k, k);
    res.expect(sq == BurnsideElement::one(), [&] { return s.to_string() + ": k*k = " + to_string(sq); });
  };
  for_each_small_key_set(r.involution_exhaustive_max_index, r.involution_exhaustive_max_size, check);
  std::mt19937_64 rng(r.seed);
  for (std::size_t i = 0; i < r.involution_samples; ++i) {
    check(sample_key_set(rng, r.involution_max_size, r.involution_max_index));
  }
  return res;
}

inline SuiteResult prop_coeff(const Ranges& r = {}) {
  SuiteResult res;
  res.name = "prop-coeff";
  std::mt19937_64 rng(r.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < r.coeff_samples; ++i) {
    auto s = sample_key_set(rng, r.coeff_max_size, r.coeff_max_index);
    auto k = key_element(s);
    for (Index s0 = 1; s0 <= r.coeff_max_index; ++s0) {
      Coeff closed = alpha(s, s0);
      Coeff brute = coeff_bruteforce(s, s0);
      Coeff read = k.coeff(Generator::dihedral(s0));
      res.expect(closed == brute && brute == read, [&] {
        return s.to_string() + " at D" + std::to_string(s0) + ": alpha " + std::to_string(closed) + ", brute " +
               std::to_string(brute) + ", key " + std::to_string(read);
      });
    }
  }
  return res;
}

inline SuiteResult rf1(const Ranges& r = {}) {
  SuiteResult res;
  res.name = "rf1";
  auto lat = o2_lattice(r.rf1_max_m);
  auto dims = fixed_point_dims(r.rf1_max_m, r.rf1_max_m);
  for (Index m = 1; m <= r.rf1_max_m; ++m) {
    auto got = basic_degree_rf1(m, lat, dims);
    auto want = basic_degree(m);
    res.expect(got == want, [&] { return "m=" + std::to_string(m) + ": " + to_string(got); });
    for (Index k = 1; k < m; ++k) {
      if (m % k != 0) continue;
      res.expect(got.coeff(Generator::dihedral(k)) == 0,
                 [&] { return "m=" + std::to_string(m) + ": nonzero at proper divisor D" + std::to_string(k); });
    }
  }
  return res;
}

inline std::vector<SuiteResult> run(const std::string& suite, const Ranges& r = {}) {
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  if (all || suite == "table") out.push_back(table(r));
  if (all || suite == "involution") out.push_back(involution(r));
  if (all || suite == "prop-coeff") out.push_back(prop_coeff(r));
  if (all || suite == "recurrence") out.push_back(recurrence(r));
  if (all || suite == "rf1") out.push_back(rf1(r));
  if (out.empty()) throw DomainError("unknown verification suite '" + suite + "'");
  return out;
}

}  // namespace brc::verify
