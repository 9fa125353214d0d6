#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brc/element.hpp"
#include "brc/key.hpp"
#include "brc/protocol.hpp"

namespace brc {

// Matrix of p -> p * k on the window W_L = span{D(1), ..., D(L)}.
// at(j, i) is the coefficient of D(j) in D(i) * k, with 1 <= i, j <= L;
// column i is the ciphertext of the probe D(i).
class OperatorMatrix {
 public:
  explicit OperatorMatrix(std::size_t window) : window_(window), entries_(window * window, 0) {
    if (window == 0) throw DomainError("window length must be >= 1");
  }

  static OperatorMatrix identity(std::size_t window) {
    OperatorMatrix m(window);
    for (std::size_t i = 1; i <= window; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t window() const { return window_; }

  Coeff& at(std::size_t row, std::size_t col) { return entries_[offset(row, col)]; }
  Coeff at(std::size_t row, std::size_t col) const { return entries_[offset(row, col)]; }

  BurnsideElement column(std::size_t col) const {
    BurnsideElement e;
    for (std::size_t row = 1; row <= window_; ++row) e.add_term(Generator::dihedral(row), at(row, col));
    return e;
  }

  // Applies the operator to an element of W_L.
  BurnsideElement apply(const BurnsideElement& p) const {
    if (!p.within_window(window_)) throw SupportError("operand lies outside the observation window");
    BurnsideElement out;
    for (const auto& [g, c] : p.terms()) out += column(g.index()) * c;
    return out;
  }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t row = 1; row <= window_; ++row) {
      for (std::size_t col = 1; col <= window_; ++col) {
        if (col > 1) out += ' ';
        out += std::to_string(at(row, col));
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::size_t offset(std::size_t row, std::size_t col) const {
    if (row == 0 || col == 0 || row > window_ || col > window_) throw DomainError("matrix index out of range");
    return (row - 1) * window_ + (col - 1);
  }

  std::size_t window_;
  std::vector<Coeff> entries_;
};

inline OperatorMatrix operator_matrix(const BurnsideElement& k, std::size_t window) {
  detail::check_key(k);
  OperatorMatrix m(window);
  // D(i) * k = sum over terms of k; every product lands in D(gcd(i, .)) or D(i).
  for (std::size_t i = 1; i <= window; ++i) {
    for (const auto& [g, c] : k.terms()) {
      switch (g.kind()) {
        case Generator::Kind::O2: m.at(i, i) = checked::add(m.at(i, i), c); break;
        case Generator::Kind::SO2: break;
        case Generator::Kind::Dihedral: {
          auto j = static_cast<std::size_t>(std::gcd<Index, Index>(i, g.index()));
          m.at(j, i) = checked::add(m.at(j, i), checked::mul(2, c));
          break;
        }
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Key ambiguity

inline bool is_prime(Index n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Index d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Index next_prime_above(Index n) {
  Index p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

// S' = q * S for a prime q > L; k_S and k_S' act identically on W_L.
inline KeySet ambiguous_key(const KeySet& s, std::size_t window, Index q) {
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
  if (q <= window) throw DomainError("scaling prime must exceed the window length");
  std::vector<Index> scaled;
  scaled.reserve(s.size());
  for (Index m : s.indices()) scaled.push_back(checked::mul_index(m, q));
  return KeySet(std::move(scaled));
}

// The first `count` prime-scaled copies of S, using the consecutive primes above L.
inline std::vector<KeySet> ambiguous_family(const KeySet& s, std::size_t window, std::size_t count) {
  if (count == 0) throw DomainError("family size must be >= 1");
  std::vector<KeySet> out;
  out.reserve(count);
  Index q = window;
  for (std::size_t i = 0; i < count; ++i) {
    q = next_prime_above(q);
    out.push_back(ambiguous_key(s, window, q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chosen-plaintext key distinguishing

// max of the symmetric difference S0 ^ S1. The membership term is the only
// odd contribution to alpha, and multiples above this index are shared, so
// beta_S0 and beta_S1 have different parity here.
inline Index choose_probe(const KeySet& s0, const KeySet& s1) {
  if (s0 == s1) throw DomainError("candidate key sets are identical");
  std::vector<Index> diff;
  std::set_symmetric_difference(s0.indices().begin(), s0.indices().end(), s1.indices().begin(), s1.indices().end(),
                                std::back_inserter(diff));
  return diff.back();
}

// Encryption oracle for the key-distinguishing game. Encrypts under k_{S_b}
// for the hidden bit b and logs every query. Only plaintexts in the dihedral
// span are answered unless the trivial O2 query is explicitly allowed.
class CpaExperiment {
 public:
  CpaExperiment(KeySet s0, KeySet s1, int hidden_bit, bool allow_non_dihedral = false)
      : s0_(std::move(s0)), s1_(std::move(s1)), hidden_bit_(hidden_bit), allow_non_dihedral_(allow_non_dihedral) {
    if (s0_ == s1_) throw DomainError("candidate key sets are identical");
    if (hidden_bit != 0 && hidden_bit != 1) throw DomainError("hidden bit must be 0 or 1");
    key_ = key_element(hidden_bit_ == 0 ? s0_ : s1_);
  }

  const KeySet& s0() const { return s0_; }
  const KeySet& s1() const { return s1_; }
  int hidden_bit() const { return hidden_bit_; }
  const std::vector<BurnsideElement>& query_log() const { return log_; }
  std::size_t query_count() const { return log_.size(); }

  BurnsideElement query(const BurnsideElement& p) {
    if (!allow_non_dihedral_) {
      for (const auto& [g, c] : p.terms()) {
        if (!g.is_dihedral()) throw DomainError("oracle only answers plaintexts in the dihedral span");
      }
    }
    log_.push_back(p);
    return mul(p, key_);
  }

  BurnsideElement probe(Index x) { return query(Generator::dihedral(x)); }

  // Adapter for cpa_distinguish.
  std::function<BurnsideElement(Index)> probe_oracle() {
    return [this](Index x) { return probe(x); };
  }

 private:
  KeySet s0_;
  KeySet s1_;
  int hidden_bit_;
  bool allow_non_dihedral_;
  BurnsideElement key_;
  std::vector<BurnsideElement> log_;
};

struct CpaOutcome {
  int guess = 0;
  Index probe = 0;
  BurnsideElement response;
  Coeff observed = 0;          // coefficient of D(probe) in the response
  Coeff expected0 = 0;         // 1 + 2 beta_S0(probe)
  Coeff expected1 = 0;         // 1 + 2 beta_S1(probe)
  std::size_t queries = 0;
};

// One dihedral query at x* = choose_probe(S0, S1) decides the hidden bit.
inline CpaOutcome cpa_distinguish(const KeySet& s0, const KeySet& s1,
                                  const std::function<BurnsideElement(Index)>& oracle) {
  CpaOutcome out;
  out.probe = choose_probe(s0, s1);
  out.expected0 = checked::add(1, checked::mul(2, beta(s0, out.probe)));
  out.expected1 = checked::add(1, checked::mul(2, beta(s1, out.probe)));
  out.response = oracle(out.probe);
  out.queries = 1;
  out.observed = out.response.coeff(Generator::dihedral(out.probe));
  if (out.observed == out.expected0) {
    out.guess = 0;
  } else if (out.observed == out.expected1) {
    out.guess = 1;
  } else {
    throw InconsistentError("oracle response matches neither candidate key");
  }
  return out;
}

// The query p = O2 returns k_{S_b} itself. Requires an experiment that
// accepts non-dihedral plaintexts.
inline CpaOutcome trivial_distinguish(CpaExperiment& experiment) {
  CpaOutcome out;
  out.response = experiment.query(BurnsideElement::one());
  out.queries = 1;
  if (out.response == key_element(experiment.s0())) {
    out.guess = 0;
  } else if (out.response == key_element(experiment.s1())) {
    out.guess = 1;
  } else {
    throw InconsistentError("oracle response matches neither candidate key");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Known-plaintext operator recovery

struct PlaintextPair {
  BurnsideElement plaintext;
  BurnsideElement ciphertext;
};

struct OperatorRecovery {
  std::size_t rank = 0;
  std::optional<OperatorMatrix> matrix;  // set iff the plaintexts span W_L

  bool determined() const { return matrix.has_value(); }
};

// Solves M * rho(p_j) = rho(c_j) for the integer operator M on W_L. Exact
// Gaussian elimination over Q; the solution must come out integral.
inline OperatorRecovery known_plaintext_solver(const std::vector<PlaintextPair>& pairs, std::size_t window) {
  using Rational = boost::multiprecision::cpp_rational;
  if (window == 0) throw DomainError("window length must be >= 1");

  // Rows: one per pair. Columns 0..L-1 are rho(p_j), L..2L-1 are rho(c_j).
  const std::size_t n = pairs.size();
  const std::size_t width = 2 * window;
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(width));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& [p, c] = pairs[r];
    if (!p.within_window(window) || !c.within_window(window)) {
      throw SupportError("pair " + std::to_string(r) + " lies outside the observation window");
    }
    for (const auto& [g, v] : p.terms()) rows[r][g.index() - 1] = v;
    for (const auto& [g, v] : c.terms()) rows[r][window + g.index() - 1] = v;
  }

  // Reduced row echelon form on the plaintext block.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < window && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[rank], rows[piv]);
    Rational lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t k = col; k < width; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  // Rows with a zero plaintext part must have a zero ciphertext part.
  for (std::size_t r = rank; r < n; ++r) {
    for (std::size_t k = window; k < width; ++k) {
      if (rows[r][k] != 0) throw InconsistentError("pairs are not generated by a single linear operator");
    }
  }

  OperatorRecovery out;
  out.rank = rank;
  if (rank < window) return out;

  // Full rank: row r now reads e_r^T * M^T = (row r of M^T), i.e. column r of M.
  OperatorMatrix m(window);
  for (std::size_t r = 0; r < window; ++r) {
    for (std::size_t k = 0; k < window; ++k) {
      const Rational& v = rows[r][window + k];
      if (denominator(v) != 1) throw InconsistentError("recovered operator is not integral");
      auto num = numerator(v);
      if (num > std::numeric_limits<Coeff>::max() || num < std::numeric_limits<Coeff>::min()) {
        throw OverflowError("recovered operator entry exceeds 64 bits");
      }
      m.at(k + 1, pivot_cols[r] + 1) = num.convert_to<Coeff>();
    }
  }
  out.matrix = std::move(m);
  return out;
}

}  // namespace brc
