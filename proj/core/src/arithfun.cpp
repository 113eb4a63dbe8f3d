#include "arithplus/arithfun.hpp"

namespace arithplus {

namespace {

u128 pow_u128(u64 base, u32 exp) {
  u128 r = 1;
  for (u32 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u128 sigma_prime_power(u64 p, u32 k) {
  // (p^(k+1) - 1) / (p - 1), exact.
  return (pow_u128(p, k + 1) - 1) / (p - 1);
}

u64 phi_prime_power(u64 p, u32 k) {
  u64 r = p - 1;
  for (u32 i = 1; i < k; ++i) r *= p;
  return r;
}

}  // namespace

u128 sigma(const Factorization& f) {
  u128 r = 1;
  for (const PrimePower& pp : f.factors)
    r = checked_mul(r, sigma_prime_power(pp.prime, pp.exponent));
  return r;
}

u64 phi(const Factorization& f) {
  u64 r = 1;
  for (const PrimePower& pp : f.factors) r *= phi_prime_power(pp.prime, pp.exponent);
  return r;
}

u64 schemmel2(const Factorization& f) {
  u64 r = 1;
  for (const PrimePower& pp : f.factors) {
    if (pp.prime == 2) return 0;
    u64 term = pp.prime - 2;
    for (u32 i = 1; i < pp.exponent; ++i) term *= pp.prime;
    r *= term;
  }
  return r;
}

u128 sigma_plus(const Factorization& f) {
  u128 r = 1;
  for (const PrimePower& pp : f.factors)
    r = checked_mul(r, sigma_prime_power(pp.prime, pp.exponent) + 1);
  return r;
}

u64 phi_plus(const Factorization& f) {
  u64 r = 1;
  for (const PrimePower& pp : f.factors)
    r *= phi_prime_power(pp.prime, pp.exponent) + 1;
  return r;
}

Rational abundancy(const Factorization& f) {
  return Rational::make(sigma(f), f.n);
}

ArithProfile profile(const Factorization& f) {
  ArithProfile p;
  p.n = f.n;
  p.sigma = sigma(f);
  p.phi = phi(f);
  p.schemmel2 = schemmel2(f);
  p.sigma_plus = sigma_plus(f);
  p.phi_plus = phi_plus(f);
  p.abundancy = Rational::make(p.sigma, f.n);
  p.omega = f.omega();
  p.factorization = f;
  return p;
}

ArithProfile profile(u64 n) { return profile(factorize(n)); }

ArithProfile profile(u64 n, const SieveTable& sieve) {
  return profile(factorize(n, sieve));
}

}  // namespace arithplus
