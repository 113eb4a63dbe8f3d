#include "arithplus/int128.hpp"

#include <algorithm>

namespace arithplus {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  constexpr u128 kMax = ~static_cast<u128>(0);
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid digit in integer literal: " + std::string(s));
    unsigned d = static_cast<unsigned>(c - '0');
    if (v > (kMax - d) / 10) throw std::overflow_error("integer literal exceeds 128 bits");
    v = v * 10 + d;
  }
  return v;
}

namespace {

struct U256 {
  u128 hi;
  u128 lo;
};

U256 mul_full(u128 a, u128 b) {
  const u64 a1 = static_cast<u64>(a >> 64), a0 = static_cast<u64>(a);
  const u64 b1 = static_cast<u64>(b >> 64), b0 = static_cast<u64>(b);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;

  u128 mid = p01 + p10;
  // mid overflow is worth 2^128 in mid units, i.e. 2^64 in hi units.
  const u128 mid_carry = (mid < p01) ? (static_cast<u128>(1) << 64) : 0;
  const u128 lo = p00 + (mid << 64);
  const u128 lo_carry = (lo < p00) ? 1 : 0;
  const u128 hi = p11 + (mid >> 64) + mid_carry + lo_carry;
  return {hi, lo};
}

}  // namespace

int cmp_product(u128 a, u128 b, u128 c, u128 d) {
  const U256 x = mul_full(a, b);
  const U256 y = mul_full(c, d);
  if (x.hi != y.hi) return x.hi < y.hi ? -1 : 1;
  if (x.lo != y.lo) return x.lo < y.lo ? -1 : 1;
  return 0;
}

}  // namespace arithplus
