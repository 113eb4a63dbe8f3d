#include "arithplus/oracles.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace arithplus {

namespace {

void check_cap(u64 n) {
  if (n == 0) throw std::domain_error("oracle argument must be positive");
  if (n > kOracleCap)
    throw std::out_of_range("oracle argument " + std::to_string(n) +
                            " exceeds cap " + std::to_string(kOracleCap));
}

// Prime powers of n by plain trial division, no sieve, no primality test.
std::vector<u64> trial_prime_powers(u64 n) {
  std::vector<u64> parts;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      u64 q = 1;
      while (n % d == 0) {
        n /= d;
        q *= d;
      }
      parts.push_back(q);
    }
  }
  if (n > 1) parts.push_back(n);
  return parts;
}

u64 divisor_sum_by_trial(u64 n) {
  u64 s = 0;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      s += d;
      if (d != n / d) s += n / d;
    }
  }
  return s;
}

u64 coprime_count(u64 n) {
  u64 c = 0;
  for (u64 m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++c;
  return c;
}

}  // namespace

u64 oracle_sigma(u64 n) {
  check_cap(n);
  return divisor_sum_by_trial(n);
}

u64 oracle_phi(u64 n) {
  check_cap(n);
  return coprime_count(n);
}

u64 oracle_schemmel2(u64 n) {
  check_cap(n);
  u64 c = 0;
  for (u64 m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1 && std::gcd(m + 1, n) == 1) ++c;
  return c;
}

u64 oracle_sigma_plus(u64 n) {
  check_cap(n);
  u64 r = 1;
  for (u64 q : trial_prime_powers(n)) r *= divisor_sum_by_trial(q) + 1;
  return r;
}

u64 oracle_phi_plus(u64 n) {
  check_cap(n);
  u64 r = 1;
  for (u64 q : trial_prime_powers(n)) r *= coprime_count(q) + 1;
  return r;
}

}  // namespace arithplus
