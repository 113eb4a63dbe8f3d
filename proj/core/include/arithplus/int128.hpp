#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arithplus {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string(u128 v);

// Parses a non-empty decimal string. Throws std::invalid_argument on junk,
// std::overflow_error past 2^128-1.
u128 parse_u128(std::string_view s);

// a*b with wraparound detection. Returns false on overflow.
constexpr bool mul_would_overflow(u128 a, u128 b, u128& out) {
  out = a * b;
  return a != 0 && out / a != b;
}

// Throws std::overflow_error instead of wrapping.
inline u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (mul_would_overflow(a, b, out))
    throw std::overflow_error("128-bit multiplication overflow");
  return out;
}

constexpr u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Sign of a*b - c*d, with all four operands up to 2^128-1. The products are
// formed as 256-bit values from 64-bit limbs so the comparison never wraps.
int cmp_product(u128 a, u128 b, u128 c, u128 d);

}  // namespace arithplus
