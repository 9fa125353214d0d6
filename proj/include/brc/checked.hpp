#pragma once

#include <cstdint>
#include <numeric>

#include "brc/error.hpp"

namespace brc {

using Coeff = std::int64_t;
using Index = std::uint64_t;

namespace checked {

inline Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline Coeff sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in subtraction");
  return r;
}

inline Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

inline Index mul_index(Index a, Index b) {
  Index r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("index overflow in multiplication");
  return r;
}

// Exact quotient; a remainder means the caller's data is inconsistent.
inline Coeff exact_div(Coeff num, Coeff den) {
  if (den == 0) throw InconsistentError("division by zero");
  if (num % den != 0) throw InconsistentError("non-integral division");
  return num / den;
}

}  // namespace checked
}  // namespace brc
