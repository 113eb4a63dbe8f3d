#pragma once

#include <cstdint>
#include <vector>

#include "arithplus/int128.hpp"

namespace arithplus {

struct PrimePower {
  u64 prime = 0;
  u32 exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition: primes strictly increasing, every
/// exponent >= 1, product of prime^exponent equal to n. n == 1 has no factors.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  u32 omega() const { return static_cast<u32>(factors.size()); }
  bool is_prime_shape() const {
    return factors.size() == 1 && factors[0].exponent == 1;
  }
  bool is_composite() const { return n >= 4 && !is_prime_shape(); }
  bool is_squarefree() const;
  /// Every exponent >= 2 (and n > 1).
  bool is_powerful() const;
  /// Recomputes the product; equals n for any valid Factorization.
  u128 product() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Smallest-prime-factor table for [2, limit], immutable after construction
/// and safe to share across threads.
class SieveTable {
 public:
  explicit SieveTable(u64 limit);

  u64 limit() const { return limit_; }
  u32 smallest_prime_factor(u64 n) const { return spf_[n]; }
  bool is_prime(u64 n) const { return n >= 2 && spf_[n] == n; }
  const std::vector<u32>& primes() const { return primes_; }

 private:
  u64 limit_;
  std::vector<u32> spf_;
  std::vector<u32> primes_;
};

/// Memory cap on sieve construction, 10^8 unless overridden by the
/// NT_SIEVE_CAP environment variable (read once).
u64 sieve_cap();

/// Throws std::out_of_range unless 2 <= limit <= sieve_cap().
SieveTable build_spf_sieve(u64 limit);

inline constexpr u64 kDefaultFactorSeed = 0x51ab5fb5u;

/// Factors any 64-bit n >= 1: trial division, then deterministic
/// Miller-Rabin plus Brent's cycle method with a seeded parameter sequence,
/// so identical inputs always give identical runs. Throws std::domain_error
/// for n == 0.
Factorization factorize(u64 n, u64 seed = kDefaultFactorSeed);

/// Sieve-backed path; requires n <= sieve.limit(). Agrees bit-exactly with
/// the sieve-free path.
Factorization factorize(u64 n, const SieveTable& sieve);

/// Deterministic and exact over the whole 64-bit range (Miller-Rabin with a
/// base set known to cover it).
bool is_prime(u64 n);

}  // namespace arithplus
