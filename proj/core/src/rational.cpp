#include "arithplus/rational.hpp"

namespace arithplus {

Rational Rational::make(u128 num, u128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (num == 0) return Rational{0, 1};
  const u128 g = gcd_u128(num, den);
  return Rational{num / g, den / g};
}

Rational mul(const Rational& a, const Rational& b) {
  // Reduce across the diagonal first so intermediate products stay small.
  const u128 g1 = gcd_u128(a.num, b.den);
  const u128 g2 = gcd_u128(b.num, a.den);
  const u128 num = checked_mul(a.num / g1, b.num / g2);
  const u128 den = checked_mul(a.den / g2, b.den / g1);
  return Rational::make(num, den);
}

std::string to_string(const Rational& r) {
  return to_string(r.num) + "/" + to_string(r.den);
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("rational literal missing '/': " + std::string(s));
  const u128 num = parse_u128(s.substr(0, slash));
  const u128 den = parse_u128(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational literal with zero denominator");
  Rational r = Rational::make(num, den);
  if (r.num != num || r.den != den)
    throw std::invalid_argument("rational literal not in lowest terms: " + std::string(s));
  return r;
}

}  // namespace arithplus
