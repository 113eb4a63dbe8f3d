#pragma once

#include "arithplus/int128.hpp"

namespace arithplus {

/// Brute-force reference evaluators, deliberately built WITHOUT the
/// multiplicative formulas: sigma sums divisors found by trial, phi counts
/// coprime residues, schemmel2 counts m with m and m+1 both coprime to n,
/// and the plus variants regroup trial-found prime powers and naively sum
/// or count inside each one. Capped at n <= 10^6 (std::out_of_range above).
inline constexpr u64 kOracleCap = 1'000'000;

u64 oracle_sigma(u64 n);
u64 oracle_phi(u64 n);
u64 oracle_schemmel2(u64 n);
u64 oracle_sigma_plus(u64 n);
u64 oracle_phi_plus(u64 n);

}  // namespace arithplus
