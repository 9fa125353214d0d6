#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "brc/checked.hpp"

namespace brc {

// A conjugacy class of O(2) with finite Weyl group: (D_k), (SO(2)) or (O(2)).
//
// The declaration order of Kind together with the index gives the canonical
// total order D(1) < D(2) < ... < SO2 < O2 used for rendering.
class Generator {
 public:
  enum class Kind : std::uint8_t { Dihedral, SO2, O2 };

  static Generator dihedral(Index k) {
    if (k == 0) throw DomainError("dihedral index must be >= 1");
    return Generator(Kind::Dihedral, k);
  }
  static constexpr Generator so2() { return Generator(Kind::SO2, 0); }
  static constexpr Generator o2() { return Generator(Kind::O2, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_dihedral() const { return kind_ == Kind::Dihedral; }
  // Dihedral index k of D(k); 0 for SO2 and O2.
  constexpr Index index() const { return index_; }

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;

  std::string name() const {
    switch (kind_) {
      case Kind::Dihedral: return "D" + std::to_string(index_);
      case Kind::SO2: return "SO2";
      case Kind::O2: return "O2";
    }
    return {};
  }

  friend std::ostream& operator<<(std::ostream& os, const Generator& g) { return os << g.name(); }

 private:
  constexpr Generator(Kind kind, Index index) : kind_(kind), index_(index) {}

  Kind kind_;
  Index index_;
};

inline Generator D(Index k) { return Generator::dihedral(k); }

}  // namespace brc

template <>
struct std::hash<brc::Generator> {
  std::size_t operator()(const brc::Generator& g) const noexcept {
    return std::hash<brc::Index>{}(g.index() * 4 + static_cast<brc::Index>(g.kind()));
  }
};
