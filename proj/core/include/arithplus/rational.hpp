#pragma once

#include <string>
#include <string_view>

#include "arithplus/int128.hpp"

namespace arithplus {

/// Exact non-negative fraction, always stored in lowest terms with den >= 1.
/// Comparisons cross-multiply in 256-bit width; no floating point anywhere.
struct Rational {
  u128 num = 0;
  u128 den = 1;

  static Rational make(u128 num, u128 den);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp_product(a.num, b.den, b.num, a.den) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Exact product, reduced. Throws std::overflow_error if the reduced result
// does not fit 128 bits.
Rational mul(const Rational& a, const Rational& b);

// Renders as "num/den", e.g. "21/10", "1/1".
std::string to_string(const Rational& r);

// Parses the "num/den" form. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view s);

}  // namespace arithplus
