#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brc/cryptanalysis.hpp"
#include "brc/verify.hpp"

namespace brc {
namespace {

const Generator O2 = Generator::o2();

OperatorMatrix matrix_of(std::size_t n, std::initializer_list<std::initializer_list<Coeff>> rows) {
  OperatorMatrix m(n);
  std::size_t r = 1;
  for (auto row : rows) {
    std::size_t c = 1;
    for (Coeff v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

// Column i read off D(i) * k with the ring product.
OperatorMatrix matrix_by_products(const BurnsideElement& k, std::size_t n) {
  OperatorMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    auto col = mul(D(i), k);
    for (std::size_t j = 1; j <= n; ++j) m.at(j, i) = col.coeff(D(j));
  }
  return m;
}

TEST(OperatorMatrix, Examples) {
  EXPECT_EQ(operator_matrix(key_element({2}), 2), matrix_of(2, {{-1, 0}, {0, -1}}));
  EXPECT_EQ(operator_matrix(O2, 4), OperatorMatrix::identity(4));
  // Columns: D1 -> D1, D2 -> 2D1 - D2, D3 -> 2D1 - D3.
  auto m = operator_matrix(key_element({2, 3}), 3);
  EXPECT_EQ(m, matrix_of(3, {{1, 2, 2}, {0, -1, 0}, {0, 0, -1}}));
  EXPECT_EQ(m.at(1, 3), 2);
  EXPECT_EQ(m.at(3, 3), -1);
  EXPECT_THROW(operator_matrix(D(1), 3), DomainError);
  EXPECT_THROW(OperatorMatrix(0), DomainError);
}

TEST(OperatorMatrix, MatchesRingProductAndApply) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    auto k = key_element(verify::sample_key_set(rng, 5, 20));
    auto m = operator_matrix(k, 12);
    EXPECT_EQ(m, matrix_by_products(k, 12));
    BurnsideElement p{{D(3), 7}, {D(12), -2}, {D(5), 1}};
    EXPECT_EQ(m.apply(p), mul(p, k));
  }
}

TEST(AmbiguousKey, Examples) {
  EXPECT_EQ(ambiguous_key({2}, 3, 5), (KeySet{10}));
  EXPECT_EQ(operator_matrix(key_element({10}), 3), operator_matrix(key_element({2}), 3));
  EXPECT_EQ(ambiguous_key({2, 3}, 5, 7), (KeySet{14, 21}));
  EXPECT_THROW(ambiguous_key({2}, 3, 3), DomainError);
  EXPECT_THROW(ambiguous_key({2}, 3, 9), DomainError);
}

TEST(AmbiguousFamily, Examples) {
  EXPECT_EQ(ambiguous_family({2}, 3, 2), (std::vector<KeySet>{{10}, {14}}));
  EXPECT_EQ(ambiguous_family({3}, 2, 1), (std::vector<KeySet>{{9}}));
  EXPECT_EQ(ambiguous_family({2, 3}, 5, 3), (std::vector<KeySet>{{14, 21}, {22, 33}, {26, 39}}));
  EXPECT_THROW(ambiguous_family({2}, 3, 0), DomainError);
}

TEST(AmbiguousFamily, SameOperatorDifferentKey) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    auto s = verify::sample_key_set(rng, 5, 20);
    std::size_t window = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    auto k = key_element(s);
    auto family = ambiguous_family(s, window, 3);
    for (std::size_t i = 0; i < family.size(); ++i) {
      auto ki = key_element(family[i]);
      EXPECT_EQ(operator_matrix(ki, window), operator_matrix(k, window));
      EXPECT_NE(ki, k);
      for (std::size_t j = 0; j < i; ++j) EXPECT_NE(family[i], family[j]);
    }
  }
}

TEST(Primes, Helpers) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(next_prime_above(20), 23u);
  EXPECT_EQ(next_prime_above(2), 3u);
}

TEST(ChooseProbe, Examples) {
  EXPECT_EQ(choose_probe({2}, {3}), 3u);
  EXPECT_EQ(choose_probe({2, 3}, {2, 5}), 5u);
  EXPECT_THROW(choose_probe({2}, {2}), DomainError);
}

TEST(Cpa, Examples) {
  {
    CpaExperiment exp({2}, {3}, 0);
    auto out = cpa_distinguish({2}, {3}, exp.probe_oracle());
    EXPECT_EQ(out.probe, 3u);
    EXPECT_EQ(out.response, (BurnsideElement{{D(3), 1}, {D(1), -2}}));
    EXPECT_EQ(out.observed, 1);
    EXPECT_EQ(out.guess, 0);
    EXPECT_EQ(exp.query_count(), 1u);
  }
  {
    CpaExperiment exp({2}, {3}, 1);
    auto out = cpa_distinguish({2}, {3}, exp.probe_oracle());
    EXPECT_EQ(out.response, (BurnsideElement{{D(3), -1}}));
    EXPECT_EQ(out.guess, 1);
  }
  {
    CpaExperiment exp({2, 3}, {2}, 0);
    auto out = cpa_distinguish({2, 3}, {2}, exp.probe_oracle());
    EXPECT_EQ(out.probe, 3u);
    EXPECT_EQ(out.observed, -1);
    EXPECT_EQ(out.expected0, -1);
    EXPECT_EQ(out.guess, 0);
  }
}

TEST(Cpa, OracleRestrictions) {
  CpaExperiment exp({2}, {3}, 0);
  EXPECT_THROW(exp.query(O2), DomainError);
  EXPECT_EQ(exp.query_count(), 0u);
  EXPECT_THROW(CpaExperiment({2}, {2}, 0), DomainError);
  EXPECT_THROW(CpaExperiment({2}, {3}, 2), DomainError);

  auto liar = [](Index) { return BurnsideElement{{D(3), 7}}; };
  EXPECT_THROW(cpa_distinguish({2}, {3}, liar), InconsistentError);
}

TEST(Cpa, TrivialO2Query) {
  for (int bit : {0, 1}) {
    CpaExperiment exp({2, 5}, {2, 7}, bit, true);
    auto out = trivial_distinguish(exp);
    EXPECT_EQ(out.guess, bit);
    EXPECT_EQ(exp.query_count(), 1u);
  }
}

TEST(Cpa, ParitySeparationExhaustive) {
  std::vector<KeySet> sets;
  verify::for_each_small_key_set(8, 3, [&](const KeySet& s) { sets.push_back(s); });
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      if (a == b) continue;
      Index x = choose_probe(a, b);
      EXPECT_NE((beta(a, x) - beta(b, x)) % 2, 0) << a.to_string() << " " << b.to_string();
    }
  }
}

TEST(OracleResponse, Identities) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    auto s = verify::sample_key_set(rng, 5, 20);
    Index x = std::uniform_int_distribution<Index>(1, 20)(rng);
    BurnsideElement expected = D(x);
    for (const auto& [n, a] : alpha_table(s)) expected.add_term(D(std::gcd(x, n)), 2 * a);
    auto response = mul(D(x), key_element(s));
    EXPECT_EQ(response, expected);
    EXPECT_EQ(response.coeff(D(x)), 1 + 2 * beta(s, x));
  }
}

TEST(KnownPlaintext, BasisProbesGiveOperator) {
  auto k = key_element({2, 3, 5});
  std::vector<PlaintextPair> pairs;
  for (Index i = 1; i <= 6; ++i) pairs.push_back({D(i), mul(D(i), k)});
  auto rec = known_plaintext_solver(pairs, 6);
  ASSERT_TRUE(rec.determined());
  EXPECT_EQ(rec.rank, 6u);
  EXPECT_EQ(*rec.matrix, operator_matrix(k, 6));
}

TEST(KnownPlaintext, GeneralPlaintexts) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Coeff> byte(0, 127);
  auto k = key_element({4, 6, 9});
  std::vector<PlaintextPair> pairs;
  for (int j = 0; j < 10; ++j) {
    BurnsideElement p;
    for (Index i = 1; i <= 8; ++i) p.add_term(D(i), byte(rng));
    pairs.push_back({p, mul(p, k)});
  }
  auto rec = known_plaintext_solver(pairs, 8);
  ASSERT_TRUE(rec.determined());
  EXPECT_EQ(*rec.matrix, operator_matrix(k, 8));
  // The recovered operator equally fits a prime-scaled key.
  EXPECT_EQ(*rec.matrix, operator_matrix(key_element(ambiguous_key({4, 6, 9}, 8, 11)), 8));
}

TEST(KnownPlaintext, Underdetermined) {
  auto k = key_element({2});
  auto rec = known_plaintext_solver({{D(1), mul(D(1), k)}}, 2);
  EXPECT_FALSE(rec.determined());
  EXPECT_EQ(rec.rank, 1u);
  // Repeated plaintexts do not add rank.
  auto p = BurnsideElement{{D(1), 1}, {D(2), 1}};
  rec = known_plaintext_solver({{p, mul(p, k)}, {p * Coeff{2}, mul(p * Coeff{2}, k)}}, 2);
  EXPECT_EQ(rec.rank, 1u);
}

TEST(KnownPlaintext, InconsistentPairs) {
  auto k = key_element({2, 3});
  std::vector<PlaintextPair> pairs;
  for (Index i = 1; i <= 3; ++i) pairs.push_back({D(i), mul(D(i), k)});
  pairs.push_back({BurnsideElement{{D(1), 1}, {D(2), 1}}, BurnsideElement{{D(1), 5}}});
  EXPECT_THROW(known_plaintext_solver(pairs, 3), InconsistentError);

  // Consistent over Q but not over Z.
  std::vector<PlaintextPair> frac{{BurnsideElement{{D(1), 2}}, D(1)}};
  EXPECT_THROW(known_plaintext_solver(frac, 1), InconsistentError);

  EXPECT_THROW(known_plaintext_solver({{D(4), D(4)}}, 3), SupportError);
}

}  // namespace
}  // namespace brc
