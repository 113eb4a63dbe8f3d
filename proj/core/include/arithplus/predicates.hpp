#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "arithplus/arithfun.hpp"

namespace arithplus {

/// The five divisibility conditions the scanner understands.
enum class ConditionId {
  lehmer,            // composite n with phi(n) | n-1
  deaconescu,        // composite n with S_2(n) | phi(n)-1
  sigma_shift,       // (n+1) | sigma(n)
  sigma_plus_shift,  // (n+1) | sigma_plus(n)
  phi_plus_shift,    // phi_plus(n) | n-1
};

inline constexpr ConditionId kAllConditions[] = {
    ConditionId::lehmer, ConditionId::deaconescu, ConditionId::sigma_shift,
    ConditionId::sigma_plus_shift, ConditionId::phi_plus_shift};

std::string_view to_string(ConditionId id);
std::optional<ConditionId> condition_from_string(std::string_view name);

/// Divisibility with the ring convention at zero: divides(0, b) iff b == 0.
constexpr bool divides(u128 a, u128 b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

// All predicates require n >= 2 (throw std::domain_error below that); n = 1
// would satisfy phi_plus(1)=1 | 0 vacuously and pollute witness sets.

bool is_lehmer(const Factorization& f);
bool is_deaconescu(const Factorization& f);

/// Some(k) with sigma(n) = k(n+1) when (n+1) | sigma(n), else nullopt.
std::optional<u64> sigma_shift_multiplier(const Factorization& f);

bool sigma_plus_shift_holds(const Factorization& f);
bool phi_plus_shift_holds(const Factorization& f);

struct PrimePair {
  u64 p = 0;
  u64 q = 0;
  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

/// All prime pairs (p, q), p != q, both <= prime_bound, with
/// sigma(p^2 q) = 2(p^2 q + 1). Candidates come from the closed form
/// q = (p^2+p-1)/(p^2-p-1); every hit is re-validated by direct evaluation.
std::vector<PrimePair> solve_sigma_p2q(u64 prime_bound);

/// Same search for sigma_plus(p^2 q) = 2(p^2 q + 1), candidates from
/// q = 2(p^2+p+1)/(p^2-p-2) for p != q plus a direct p == q sweep.
/// Expected empty; reports whatever direct evaluation finds.
std::vector<PrimePair> solve_sigma_plus_p2q(u64 prime_bound);

}  // namespace arithplus
