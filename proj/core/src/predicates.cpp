#include "arithplus/predicates.hpp"

#include <stdexcept>

namespace arithplus {

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::lehmer: return "lehmer";
    case ConditionId::deaconescu: return "deaconescu";
    case ConditionId::sigma_shift: return "sigma-shift";
    case ConditionId::sigma_plus_shift: return "sigma-plus-shift";
    case ConditionId::phi_plus_shift: return "phi-plus-shift";
  }
  return "?";
}

std::optional<ConditionId> condition_from_string(std::string_view name) {
  for (ConditionId id : kAllConditions)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

namespace {

void require_n_ge_2(const Factorization& f) {
  if (f.n < 2) throw std::domain_error("predicate requires n >= 2");
}

}  // namespace

bool is_lehmer(const Factorization& f) {
  require_n_ge_2(f);
  return f.is_composite() && (f.n - 1) % phi(f) == 0;
}

bool is_deaconescu(const Factorization& f) {
  require_n_ge_2(f);
  return f.is_composite() && divides(schemmel2(f), phi(f) - 1);
}

std::optional<u64> sigma_shift_multiplier(const Factorization& f) {
  require_n_ge_2(f);
  const u128 s = sigma(f);
  if (s % (static_cast<u128>(f.n) + 1) != 0) return std::nullopt;
  return static_cast<u64>(s / (static_cast<u128>(f.n) + 1));
}

bool sigma_plus_shift_holds(const Factorization& f) {
  require_n_ge_2(f);
  return sigma_plus(f) % (static_cast<u128>(f.n) + 1) == 0;
}

bool phi_plus_shift_holds(const Factorization& f) {
  require_n_ge_2(f);
  return (f.n - 1) % phi_plus(f) == 0;
}

namespace {

// sigma(p^2 q) = (1+p+p^2)(1+q) when p != q.
bool sigma_p2q_equation(u64 p, u64 q) {
  const u128 lhs = checked_mul(1 + static_cast<u128>(p) * (p + 1), q + 1);
  const u128 n = checked_mul(static_cast<u128>(p) * p, q);
  return lhs == 2 * (n + 1);
}

// sigma_plus(p^2 q) = (2+p+p^2)(2+q) when p != q.
bool sigma_plus_p2q_equation(u64 p, u64 q) {
  const u128 lhs = checked_mul(2 + static_cast<u128>(p) * (p + 1), q + 2);
  const u128 n = checked_mul(static_cast<u128>(p) * p, q);
  return lhs == 2 * (n + 1);
}

}  // namespace

std::vector<PrimePair> solve_sigma_p2q(u64 prime_bound) {
  std::vector<PrimePair> out;
  for (u64 p = 2; p <= prime_bound; ++p) {
    if (!is_prime(p)) continue;
    const u128 den = static_cast<u128>(p) * p - p - 1;
    const u128 num = static_cast<u128>(p) * p + p - 1;
    if (num % den != 0) continue;
    const u64 q = static_cast<u64>(num / den);
    if (q <= prime_bound && q != p && is_prime(q) && sigma_p2q_equation(p, q))
      out.push_back({p, q});
  }
  return out;
}

std::vector<PrimePair> solve_sigma_plus_p2q(u64 prime_bound) {
  std::vector<PrimePair> out;
  for (u64 p = 2; p <= prime_bound; ++p) {
    if (!is_prime(p)) continue;
    // p == q means n = p^3 and sigma_plus(n) = sigma(p^3) + 1.
    const u128 cube = static_cast<u128>(p) * p * p;
    if (cube <= ~static_cast<u64>(0) &&
        1 + p + static_cast<u128>(p) * p + cube + 1 == 2 * (cube + 1))
      out.push_back({p, p});
    const u128 den = static_cast<u128>(p) * p - p - 2;  // zero at p = 2: no candidate there
    if (den == 0) continue;
    const u128 num = 2 * (static_cast<u128>(p) * p + p + 1);
    if (num % den != 0) continue;
    const u64 q = static_cast<u64>(num / den);
    if (q <= prime_bound && q != p && is_prime(q) && sigma_plus_p2q_equation(p, q))
      out.push_back({p, q});
  }
  return out;
}

}  // namespace arithplus
