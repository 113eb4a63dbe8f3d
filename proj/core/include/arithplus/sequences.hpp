#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "arithplus/arithfun.hpp"

namespace arithplus {

/// Which of the two shifted functions a sequence query runs over.
enum class SeqFunc { sigma_plus, phi_plus };

std::string_view to_string(SeqFunc func);
std::optional<SeqFunc> seq_func_from_string(std::string_view name);

/// Evaluates the selected function on an existing factorization.
u128 seq_value(SeqFunc func, const Factorization& f);

/// All n sharing one function value.
struct CollisionGroup {
  u128 value = 0;
  std::vector<u64> members;  // strictly ascending, always >= 2 entries

  friend bool operator==(const CollisionGroup&, const CollisionGroup&) = default;
};

/// Positions a < b < c whose values form a 3-term arithmetic progression:
/// 2*fb == fa + fc. The positions themselves need not be equally spaced.
struct ApTriple {
  u64 a = 0, b = 0, c = 0;
  u128 fa = 0, fb = 0, fc = 0;

  friend bool operator==(const ApTriple&, const ApTriple&) = default;
};

/// Groups every n in [1, max_n] by function value and returns the groups
/// with at least two members, sorted by value. Requires max_n >= 2.
std::vector<CollisionGroup> find_collisions(SeqFunc func, u64 max_n);

/// The closed-form collision pair {9*2^(k-1), 5*2^k} with shared sigma-plus
/// value 7*2^(k+1), re-validated by direct evaluation. Requires k >= 2;
/// throws std::overflow_error once 5*2^k leaves 64 bits.
CollisionGroup family_collision_sigma_plus(u32 k);

/// The closed-form collision pair {7p, 9p} with shared phi-plus value 7p,
/// for p prime, p not 3 or 7 (those collapse the pair). Re-validated by
/// direct evaluation; std::domain_error on a bad p.
CollisionGroup family_collision_phi_plus(u64 p);

/// All triples a < b < c <= max_n with 2f(b) = f(a) + f(c), in lexicographic
/// (a, b, c) order, truncated to max_results. Requires max_n >= 3.
std::vector<ApTriple> find_3term_aps(SeqFunc func, u64 max_n, u64 max_results);

/// The closed-form sigma-plus progression (2^k, 2^(k+2), 5*2^k) with values
/// (2^(k+1), 2^(k+3), 7*2^(k+1)). Requires k >= 1; throws std::overflow_error
/// once 5*2^k leaves 64 bits.
ApTriple family_ap_sigma_plus(u32 k);

/// The closed-form phi-plus progression (3p, 7p, 11p) with values equal to
/// the positions themselves. Requires p prime, p >= 13; std::domain_error
/// otherwise.
ApTriple family_ap_phi_plus(u64 p);

}  // namespace arithplus
