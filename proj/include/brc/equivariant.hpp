#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brc/checked.hpp"
#include "brc/element.hpp"
#include "brc/key.hpp"

namespace brc {

// Finite slice of the orbit-type lattice: the classes, their Weyl group
// orders |W(H)|, the counts n(H, K) of subgroups in (K) containing a fixed
// H, and the partial order (H) <= (K).
//
// Classes are stored in ascending canonical order; recurrences walk them
// from the top down.
class LatticeData {
 public:
  explicit LatticeData(std::vector<Generator> classes)
      : classes_(std::move(classes)),
        weyl_(classes_.size(), 1),
        contains_(classes_.size() * classes_.size(), 0),
        leq_(classes_.size() * classes_.size(), false) {
    std::sort(classes_.begin(), classes_.end());
    for (std::size_t i = 0; i < classes_.size(); ++i) position_.emplace(classes_[i], i);
  }

  const std::vector<Generator>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool has(const Generator& g) const { return position_.count(g) != 0; }
  std::size_t position(const Generator& g) const {
    auto it = position_.find(g);
    if (it == position_.end()) throw DomainError("class " + g.name() + " is outside the lattice range");
    return it->second;
  }

  Coeff weyl_order(const Generator& h) const { return weyl_[position(h)]; }
  Coeff contains_count(const Generator& h, const Generator& k) const { return contains_[cell(h, k)]; }
  bool leq(const Generator& h, const Generator& k) const { return leq_[cell(h, k)]; }

  void set_weyl_order(const Generator& h, Coeff w) { weyl_[position(h)] = w; }
  void set_contains_count(const Generator& h, const Generator& k, Coeff n) { contains_[cell(h, k)] = n; }
  void set_leq(const Generator& h, const Generator& k, bool v) { leq_[cell(h, k)] = v; }

  // Structural invariants: n(H,H) = 1, |W(O2)| = 1, positive Weyl orders,
  // n(H,K) > 0 only when (H) <= (K). Returns an empty string when they hold.
  std::string validate() const {
    for (const auto& h : classes_) {
      if (weyl_order(h) <= 0) return "non-positive Weyl order at " + h.name();
      if (contains_count(h, h) != 1) return "n(H,H) != 1 at " + h.name();
      if (!leq(h, h)) return "order not reflexive at " + h.name();
      for (const auto& k : classes_) {
        if (contains_count(h, k) < 0) return "negative n(" + h.name() + "," + k.name() + ")";
        if (contains_count(h, k) > 0 && !leq(h, k)) return "n(" + h.name() + "," + k.name() + ") > 0 but H !<= K";
        // Top-down evaluation needs the canonical order to extend <=.
        if (leq(h, k) && k < h) return "class order does not extend " + h.name() + " <= " + k.name();
      }
    }
    if (has(Generator::o2()) && weyl_order(Generator::o2()) != 1) return "|W(O2)| != 1";
    return {};
  }

 private:
  std::size_t cell(const Generator& h, const Generator& k) const { return position(h) * classes_.size() + position(k); }

  std::vector<Generator> classes_;
  std::map<Generator, std::size_t> position_;
  std::vector<Coeff> weyl_;
  std::vector<Coeff> contains_;
  std::vector<bool> leq_;
};

// O(2) over {D(1..max_index), SO2, O2}:
//   |W(D_k)| = 2, |W(SO2)| = 2, |W(O2)| = 1;
//   n(D_k, D_m) = [k | m], n(D_k, O2) = 1, n(D_k, SO2) = 0,
//   n(SO2, SO2) = n(SO2, O2) = n(O2, O2) = 1.
inline LatticeData o2_lattice(Index max_index) {
  if (max_index == 0) throw DomainError("lattice bound must be >= 1");
  std::vector<Generator> classes;
  for (Index k = 1; k <= max_index; ++k) classes.push_back(Generator::dihedral(k));
  classes.push_back(Generator::so2());
  classes.push_back(Generator::o2());

  LatticeData lat(classes);
  const auto so2 = Generator::so2();
  const auto o2 = Generator::o2();
  for (Index k = 1; k <= max_index; ++k) {
    const auto dk = Generator::dihedral(k);
    lat.set_weyl_order(dk, 2);
    for (Index m = k; m <= max_index; m += k) {
      lat.set_contains_count(dk, Generator::dihedral(m), 1);
      lat.set_leq(dk, Generator::dihedral(m), true);
    }
    lat.set_contains_count(dk, o2, 1);
    lat.set_leq(dk, o2, true);
  }
  lat.set_weyl_order(so2, 2);
  lat.set_weyl_order(o2, 1);
  for (const auto& [h, k] : {std::pair{so2, so2}, std::pair{so2, o2}, std::pair{o2, o2}}) {
    lat.set_contains_count(h, k, 1);
    lat.set_leq(h, k, true);
  }
  return lat;
}

namespace detail {

// n_H = (top(H) - sum over (K) > (H) of n_K n(H,K) |W(K)|) / |W(H)|,
// evaluated from maximal classes downward.
template <typename Top>
BurnsideElement top_down_recurrence(const LatticeData& lattice, Top&& top, const char* what) {
  const auto& cls = lattice.classes();
  std::vector<Coeff> n(cls.size(), 0);
  BurnsideElement out;
  for (std::size_t pos = cls.size(); pos-- > 0;) {
    const Generator& h = cls[pos];
    Coeff acc = top(h);
    for (std::size_t above = pos + 1; above < cls.size(); ++above) {
      const Generator& k = cls[above];
      if (n[above] == 0 || !lattice.leq(h, k)) continue;
      acc = checked::sub(acc, checked::mul(checked::mul(n[above], lattice.contains_count(h, k)), lattice.weyl_order(k)));
    }
    Coeff w = lattice.weyl_order(h);
    if (acc % w != 0) {
      throw InconsistentError(std::string(what) + ": non-integral coefficient at " + h.name() + " (" +
                              std::to_string(acc) + " / " + std::to_string(w) + ")");
    }
    n[pos] = acc / w;
    out.add_term(h, n[pos]);
  }
  return out;
}

}  // namespace detail

// Product of two generators computed from lattice data alone, by counting
// orbit types of G/H x G/K. Must agree with generator_product.
inline BurnsideElement recurrence_mul(const Generator& h, const Generator& k, const LatticeData& lattice) {
  if (!lattice.has(h) || !lattice.has(k)) throw DomainError("recurrence_mul: factor outside the lattice range");
  const Coeff wh = lattice.weyl_order(h);
  const Coeff wk = lattice.weyl_order(k);
  return detail::top_down_recurrence(
      lattice,
      [&](const Generator& l) {
        return checked::mul(checked::mul(lattice.contains_count(l, h), wh),
                            checked::mul(lattice.contains_count(l, k), wk));
      },
      "recurrence_mul");
}

// dim V_m^H for the irreducible O(2)-representations V_0, ..., V_max_irrep.
class FixedPointTable {
 public:
  FixedPointTable(Index max_irrep, Index max_index)
      : max_irrep_(max_irrep), max_index_(max_index), dihedral_((max_irrep + 1) * max_index, 0) {}

  Index max_irrep() const { return max_irrep_; }
  Index max_index() const { return max_index_; }

  int dim_fixed(Index m, const Generator& h) const {
    if (m > max_irrep_) throw DomainError("irrep index " + std::to_string(m) + " outside the table");
    if (m == 0) return 1;
    switch (h.kind()) {
      case Generator::Kind::O2:
      case Generator::Kind::SO2: return 0;
      case Generator::Kind::Dihedral:
        if (h.index() > max_index_) throw DomainError("class " + h.name() + " outside the table");
        return dihedral_[m * max_index_ + (h.index() - 1)];
    }
    return 0;
  }

  void set_dihedral(Index m, Index k, int dim) { dihedral_[m * max_index_ + (k - 1)] = dim; }

 private:
  Index max_irrep_;
  Index max_index_;
  std::vector<int> dihedral_;
};

// V_m = C with e^{i t} v = e^{i m t} v and kappa v = conj(v). For m >= 1 the
// rotation by 2 pi / k acts trivially iff k | m, and the reflection then
// fixes the real line: dim V_m^{D_k} = [k | m]. SO(2) and O(2) fix nothing.
inline FixedPointTable fixed_point_dims(Index max_irrep, Index max_index) {
  if (max_irrep == 0 || max_index == 0) throw DomainError("table bounds must be >= 1");
  FixedPointTable t(max_irrep, max_index);
  for (Index m = 1; m <= max_irrep; ++m) {
    for (Index k = 1; k <= max_index; ++k) t.set_dihedral(m, k, m % k == 0 ? 1 : 0);
  }
  return t;
}

// Basic degree of V_m from the fixed-point recurrence with top term
// (-1)^{dim V_m^H}.
inline BurnsideElement basic_degree_rf1(Index m, const LatticeData& lattice, const FixedPointTable& dims) {
  return detail::top_down_recurrence(
      lattice, [&](const Generator& h) -> Coeff { return dims.dim_fixed(m, h) % 2 == 0 ? 1 : -1; },
      "basic_degree_rf1");
}

// Degree of an equivariant linear isomorphism whose negative spectrum meets
// the V_k-isotypic component with total multiplicity mu[k]:
// prod_k deg_{V_k}^{mu_k}.
inline BurnsideElement linear_iso_degree(const std::map<Index, std::uint64_t>& mu) {
  BurnsideElement out = BurnsideElement::one();
  for (const auto& [k, mult] : mu) out *= power(basic_degree(k), mult);
  return out;
}

}  // namespace brc
