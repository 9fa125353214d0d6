#pragma once

#include <charconv>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brc/checked.hpp"
#include "brc/generator.hpp"

namespace brc {

struct Term {
  Generator generator;
  Coeff coeff;
};

// Product of two generators in A(O(2)). Every product is a single generator
// times a positive multiplicity, or zero.
//
//   O2 * x      = x
//   SO2 * SO2   = 2 SO2
//   SO2 * D(m)  = 0
//   D(k) * D(m) = 2 D(gcd(k, m))
inline std::optional<Term> generator_product(const Generator& a, const Generator& b) {
  using K = Generator::Kind;
  if (a.kind() == K::O2) return Term{b, 1};
  if (b.kind() == K::O2) return Term{a, 1};
  if (a.kind() == K::SO2 && b.kind() == K::SO2) return Term{Generator::so2(), 2};
  if (a.kind() == K::SO2 || b.kind() == K::SO2) return std::nullopt;
  return Term{Generator::dihedral(std::gcd(a.index(), b.index())), 2};
}

// Finitely supported integer combination of generators, kept in canonical
// form: sorted by generator order, no zero coefficients.
class BurnsideElement {
 public:
  using Terms = std::map<Generator, Coeff>;

  BurnsideElement() = default;
  BurnsideElement(const Generator& g) { terms_.emplace(g, 1); }  // NOLINT(implicit)
  BurnsideElement(std::initializer_list<Term> terms) {
    for (const auto& t : terms) add_term(t.generator, t.coeff);
  }

  static BurnsideElement zero() { return {}; }
  static BurnsideElement one() { return Generator::o2(); }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }

  std::vector<Generator> support() const {
    std::vector<Generator> out;
    out.reserve(terms_.size());
    for (const auto& [g, c] : terms_) out.push_back(g);
    return out;
  }

  // True when every generator in the support is D(i) with i <= window.
  bool within_window(Index window) const {
    for (const auto& [g, c] : terms_) {
      if (!g.is_dihedral() || g.index() > window) return false;
    }
    return true;
  }

  void add_term(const Generator& g, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted) return;
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  BurnsideElement& operator+=(const BurnsideElement& rhs) {
    for (const auto& [g, c] : rhs.terms_) add_term(g, c);
    return *this;
  }
  BurnsideElement& operator-=(const BurnsideElement& rhs) {
    for (const auto& [g, c] : rhs.terms_) add_term(g, checked::sub(0, c));
    return *this;
  }
  BurnsideElement& operator*=(Coeff s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) c = checked::mul(c, s);
    return *this;
  }

  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator-(BurnsideElement a) { return a *= -1; }
  friend BurnsideElement operator*(Coeff s, BurnsideElement a) { return a *= s; }
  friend BurnsideElement operator*(BurnsideElement a, Coeff s) { return a *= s; }

  // Burnside product, the bilinear extension of generator_product.
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
    BurnsideElement out;
    for (const auto& [ga, ca] : a.terms_) {
      for (const auto& [gb, cb] : b.terms_) {
        auto t = generator_product(ga, gb);
        if (!t) continue;
        out.add_term(t->generator, checked::mul(checked::mul(ca, cb), t->coeff));
      }
    }
    return out;
  }
  BurnsideElement& operator*=(const BurnsideElement& rhs) { return *this = *this * rhs; }

  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;

 private:
  Terms terms_;
};

inline Coeff coeff(const BurnsideElement& a, const Generator& h) { return a.coeff(h); }

inline BurnsideElement mul(const BurnsideElement& a, const BurnsideElement& b) { return a * b; }

// x^n by repeated squaring; x^0 = O2.
inline BurnsideElement power(BurnsideElement x, std::uint64_t n) {
  BurnsideElement acc = BurnsideElement::one();
  while (n != 0) {
    if (n & 1U) acc *= x;
    n >>= 1U;
    if (n != 0) x *= x;
  }
  return acc;
}

// Canonical text form: one "<generator> <coeff>" line per term in generator
// order, or the single line "0" for the empty element. Each line ends in '\n'.
inline std::string render(const BurnsideElement& a) {
  if (a.empty()) return "0\n";
  std::string out;
  for (const auto& [g, c] : a.terms()) {
    out += g.name();
    out += ' ';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

// Single-line human form, e.g. "O2 + 2*D1 - D2 - D3": O2 and SO2 first,
// then dihedral terms by index.
inline std::string to_string(const BurnsideElement& a) {
  if (a.empty()) return "0";
  std::vector<Term> ordered;
  for (auto g : {Generator::o2(), Generator::so2()}) {
    if (Coeff c = a.coeff(g)) ordered.push_back({g, c});
  }
  for (const auto& [g, c] : a.terms()) {
    if (g.is_dihedral()) ordered.push_back({g, c});
  }
  std::string out;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& [g, c] = ordered[i];
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c)) + "*";
    out += g.name();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BurnsideElement& a) { return os << to_string(a); }

namespace detail {

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

inline Generator parse_generator(std::string_view s) {
  if (s == "O2") return Generator::o2();
  if (s == "SO2") return Generator::so2();
  if (s.size() >= 2 && s.front() == 'D' && s[1] != '+' && s[1] != '-') {
    auto k = parse_number<Index>(s.substr(1), "dihedral index");
    if (k == 0) throw ParseError("dihedral index must be >= 1");
    return Generator::dihedral(k);
  }
  throw ParseError("unknown generator '" + std::string(s) + "'");
}

}  // namespace detail

// Strict inverse of render() on a sequence of lines (without terminators).
// Terms must be in strictly increasing generator order with nonzero
// coefficients; the empty element is exactly the single line "0".
inline BurnsideElement parse_element(const std::vector<std::string>& lines) {
  if (lines.empty()) throw ParseError("missing element body");
  if (lines.size() == 1 && lines.front() == "0") return {};
  BurnsideElement out;
  std::optional<Generator> prev;
  for (const auto& line : lines) {
    auto sp = line.find(' ');
    if (sp == std::string::npos || line.find(' ', sp + 1) != std::string::npos) {
      throw ParseError("malformed term line '" + line + "'");
    }
    std::string_view view(line);
    Generator g = detail::parse_generator(view.substr(0, sp));
    auto c = detail::parse_number<Coeff>(view.substr(sp + 1), "coefficient");
    if (c == 0) throw ParseError("zero coefficient for " + g.name());
    if (prev && !(*prev < g)) throw ParseError("terms out of canonical order at " + g.name());
    prev = g;
    out.add_term(g, c);
  }
  return out;
}

}  // namespace brc
