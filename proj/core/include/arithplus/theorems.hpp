#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "arithplus/arithfun.hpp"
#include "arithplus/witness.hpp"

namespace arithplus {

enum class TheoremId {
  pq_sigma,              // n = pq distinct primes: (n+1) never divides sigma(n)
  pq_sigma_plus,         // n = pq distinct primes: (n+1) never divides sigma_plus(n)
  p2q_sigma,             // sigma(p^2 q) = 2(p^2 q + 1): solution list, expected {(2,5)}
  p2q_sigma_plus,        // sigma_plus(p^2 q) = 2(p^2 q + 1): expected no solutions
  squarefree_phi_plus,   // squarefree composite n: phi_plus(n) never divides n-1
  prime_power_phi_plus,  // p^r, r >= 2, phi_plus | n-1 only at n = 4
  sigma_plus_bounds,     // I(n)/2 < sigma_plus(n)/(n+1) < 2^omega I(n) for all n >= 2
  phi_plus_bounds,       // powerful n: prod(1+1/p^2) <= (n-1)/phi_plus(n) < 2^omega
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::pq_sigma,          TheoremId::pq_sigma_plus,
    TheoremId::p2q_sigma,         TheoremId::p2q_sigma_plus,
    TheoremId::squarefree_phi_plus, TheoremId::prime_power_phi_plus,
    TheoremId::sigma_plus_bounds, TheoremId::phi_plus_bounds};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// One sandwich-inequality evaluation, all three values exact rationals.
struct BoundReport {
  u64 n = 0;
  Rational lower;
  Rational middle;
  Rational upper;
  bool lower_ok = false;
  bool upper_ok = false;
};

/// lower = I(n)/2, middle = sigma_plus(n)/(n+1), upper = 2^omega(n) * I(n);
/// both comparisons strict. Requires n >= 2.
BoundReport check_sigma_plus_bounds(const Factorization& f);

/// lower = prod over prime divisors of (1 + 1/p^2), middle = (n-1)/phi_plus(n),
/// upper = 2^omega(n); lower uses <=, upper uses <. Requires powerful n >= 4
/// (every exponent >= 2); throws std::domain_error otherwise. Violations are
/// reported in the flags, never asserted.
BoundReport check_phi_plus_bounds(const Factorization& f);

struct VerifyOutcome {
  std::vector<Witness> witnesses;  // ascending by n
  u64 checked = 0;                 // hypothesis-class instances enumerated
};

/// Exhaustively enumerates the theorem's hypothesis class with n <= bound and
/// returns every counterexample to its conclusion, ascending by n. For
/// p2q_sigma the list holds the solutions instead (expected exactly n = 20).
/// Throws std::invalid_argument for bound < 4.
VerifyOutcome verify_theorem_report(TheoremId id, u64 bound, unsigned workers = 1);

/// Witness list only.
std::vector<Witness> verify_theorem(TheoremId id, u64 bound, unsigned workers = 1);

}  // namespace arithplus
