#pragma once

#include <bit>
#include <cstdint>

#include "core/signature.hpp"

namespace garank {

inline int blade_grade(std::uint32_t mask) { return std::popcount(mask); }

struct BladeProduct {
  std::uint32_t mask;
  int sign;  // +1 or -1
};

// e_A e_B = sign * e_(A xor B). The sign counts the transpositions needed to
// sort the concatenated index sequence, plus one -1 per shared generator
// with eta_aa = -1.
inline BladeProduct blade_product(std::uint32_t a, std::uint32_t b, const Signature& sig) {
  if (a >= sig.blade_count() || b >= sig.blade_count())
    fail(errc::out_of_range, "blade mask exceeds algebra dimension");
  int swaps = 0;
  for (std::uint32_t t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  swaps += std::popcount(a & b & sig.negative_mask());
  return {a ^ b, (swaps & 1) ? -1 : +1};
}

// e_A^2 = blade_square_sign(A) * e, hence e_A^{-1} = blade_square_sign(A) * e_A.
inline int blade_square_sign(std::uint32_t a, const Signature& sig) {
  return blade_product(a, a, sig).sign;
}

}  // namespace garank
