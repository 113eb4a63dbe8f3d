#include "arithplus/factorize.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arithplus {

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool Factorization::is_powerful() const {
  if (factors.empty()) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& pp) { return pp.exponent >= 2; });
}

u128 Factorization::product() const {
  u128 prod = 1;
  for (const PrimePower& pp : factors)
    for (u32 i = 0; i < pp.exponent; ++i) prod = checked_mul(prod, pp.prime);
  return prod;
}

u64 sieve_cap() {
  static const u64 cap = [] {
    if (const char* env = std::getenv("NT_SIEVE_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2) return static_cast<u64>(v);
    }
    return static_cast<u64>(100'000'000);
  }();
  return cap;
}

SieveTable::SieveTable(u64 limit) : limit_(limit), spf_(limit + 1, 0) {
  // Linear sieve: each composite is crossed off exactly once, by its
  // smallest prime factor.
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<u32>(i);
      primes_.push_back(static_cast<u32>(i));
    }
    for (u32 p : primes_) {
      if (p > spf_[i]) break;
      const u64 next = static_cast<u64>(p) * i;
      if (next > limit) break;
      spf_[next] = p;
    }
  }
}

SieveTable build_spf_sieve(u64 limit) {
  if (limit < 2)
    throw std::out_of_range("sieve limit must be at least 2, got " + std::to_string(limit));
  if (limit > sieve_cap())
    throw std::out_of_range("sieve limit " + std::to_string(limit) +
                            " exceeds memory cap " + std::to_string(sieve_cap()));
  return SieveTable(limit);
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr u64 kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                73, 79, 83, 89, 97, 101};

bool miller_rabin(u64 n) {
  const int r = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> r;
  // These seven bases decide primality for every n < 2^64.
  for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                   1795265022ull}) {
    u64 a = base % n;
    if (a == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Brent's variant of Pollard's rho. n must be odd, composite, and free of
// the trial-division primes. The polynomial parameters come from a seeded
// splitmix64 stream, so the factor found is a pure function of (n, seed).
u64 brent_rho(u64 n, u64 seed) {
  u64 state = seed ^ (n * 0x9e3779b97f4a7c15ull);
  for (;;) {
    const u64 c = splitmix64(state) % (n - 1) + 1;
    u64 y = splitmix64(state) % n;
    u64 g = 1, q = 1, ys = 0, x = 0;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 span = std::min(m, r - k);
        for (u64 i = 0; i < span; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // Backtrack one step at a time to recover the factor the batch skipped.
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
    // Degenerate cycle; retry with fresh parameters from the same stream.
  }
}

void factor_recursive(u64 n, u64 seed, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = brent_rho(n, seed);
  factor_recursive(d, seed, out);
  factor_recursive(n / d, seed, out);
}

Factorization from_sorted_primes(u64 n, std::vector<u64>& primes) {
  std::sort(primes.begin(), primes.end());
  Factorization f;
  f.n = n;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    f.factors.push_back({primes[i], static_cast<u32>(j - i)});
    i = j;
  }
  return f;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 103 * 103) return true;
  return miller_rabin(n);
}

Factorization factorize(u64 n, u64 seed) {
  if (n == 0) throw std::domain_error("factorize(0) is undefined");
  Factorization f;
  f.n = n;
  u64 cur = n;
  for (u64 p : kSmallPrimes) {
    if (p * p > cur) break;
    if (cur % p == 0) {
      u32 e = 0;
      while (cur % p == 0) {
        cur /= p;
        ++e;
      }
      f.factors.push_back({p, e});
    }
  }
  if (cur == 1) return f;
  if (is_prime(cur)) {
    f.factors.push_back({cur, 1});
    return f;
  }
  std::vector<u64> primes;
  factor_recursive(cur, seed, primes);
  Factorization rest = from_sorted_primes(cur, primes);
  f.factors.insert(f.factors.end(), rest.factors.begin(), rest.factors.end());
  return f;
}

Factorization factorize(u64 n, const SieveTable& sieve) {
  if (n == 0) throw std::domain_error("factorize(0) is undefined");
  if (n > sieve.limit())
    throw std::out_of_range("n " + std::to_string(n) + " exceeds sieve limit " +
                            std::to_string(sieve.limit()));
  Factorization f;
  f.n = n;
  u64 cur = n;
  while (cur > 1) {
    const u64 p = sieve.smallest_prime_factor(cur);
    u32 e = 0;
    while (cur % p == 0) {
      cur /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

}  // namespace arithplus
