#pragma once

#include "arithplus/factorize.hpp"
#include "arithplus/rational.hpp"

namespace arithplus {

/// Sum of divisors, product over factors of (p^(k+1) - 1)/(p - 1).
/// Computed in 128-bit width; throws std::overflow_error rather than wrap.
u128 sigma(const Factorization& f);

/// Euler totient, product of p^(k-1)(p - 1). Fits 64 bits for 64-bit n.
u64 phi(const Factorization& f);

/// Schemmel totient S_2: per prime power p^(k-1)(p - 2) for odd p, 0 at
/// p = 2; multiplicative, S_2(1) = 1. Counts m <= n with m and m+1 both
/// coprime to n.
u64 schemmel2(const Factorization& f);

/// sigma-plus: product over prime powers of (sigma(p^k) + 1); 1 at n = 1.
u128 sigma_plus(const Factorization& f);

/// phi-plus: product over prime powers of (phi(p^k) + 1); 1 at n = 1.
/// Bounded by n (equality exactly on squarefree n), so it fits 64 bits.
u64 phi_plus(const Factorization& f);

/// Abundancy index sigma(n)/n in lowest terms.
Rational abundancy(const Factorization& f);

/// Every function value for one n, all derived from a single factorization.
struct ArithProfile {
  u64 n = 1;
  u128 sigma = 1;
  u64 phi = 1;
  u64 schemmel2 = 1;
  u128 sigma_plus = 1;
  u64 phi_plus = 1;
  Rational abundancy{1, 1};
  u32 omega = 0;
  Factorization factorization;

  friend bool operator==(const ArithProfile&, const ArithProfile&) = default;
};

ArithProfile profile(const Factorization& f);
ArithProfile profile(u64 n);
ArithProfile profile(u64 n, const SieveTable& sieve);

}  // namespace arithplus
