#include "arithplus/sequences.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace arithplus {

namespace {

// 5*2^k (the largest member any sigma-plus family uses) must fit u64.
void require_pow2_family_in_range(u32 k) {
  if (k > 61) throw std::overflow_error("family index k too large for 64 bits");
}

u128 eval_at(SeqFunc func, u64 n) { return seq_value(func, factorize(n)); }

std::map<u128, std::vector<u64>> value_table(SeqFunc func, u64 max_n) {
  SieveTable sieve = build_spf_sieve(std::max<u64>(2, max_n));
  std::map<u128, std::vector<u64>> by_value;
  for (u64 n = 1; n <= max_n; ++n) {
    by_value[seq_value(func, factorize(n, sieve))].push_back(n);
  }
  return by_value;
}

}  // namespace

std::string_view to_string(SeqFunc func) {
  return func == SeqFunc::sigma_plus ? "sigma-plus" : "phi-plus";
}

std::optional<SeqFunc> seq_func_from_string(std::string_view name) {
  if (name == "sigma-plus") return SeqFunc::sigma_plus;
  if (name == "phi-plus") return SeqFunc::phi_plus;
  return std::nullopt;
}

u128 seq_value(SeqFunc func, const Factorization& f) {
  return func == SeqFunc::sigma_plus ? sigma_plus(f) : static_cast<u128>(phi_plus(f));
}

std::vector<CollisionGroup> find_collisions(SeqFunc func, u64 max_n) {
  if (max_n < 2) throw std::domain_error("find_collisions: max_n must be >= 2");
  std::vector<CollisionGroup> out;
  for (auto& [value, members] : value_table(func, max_n)) {
    if (members.size() < 2) continue;
    out.push_back(CollisionGroup{value, std::move(members)});
  }
  return out;
}

CollisionGroup family_collision_sigma_plus(u32 k) {
  if (k < 2) throw std::domain_error("family_collision_sigma_plus: k must be >= 2");
  require_pow2_family_in_range(k);
  const u64 m = u64{9} << (k - 1);
  const u64 n = u64{5} << k;
  const u128 value = u128{7} << (k + 1);
  if (eval_at(SeqFunc::sigma_plus, m) != value ||
      eval_at(SeqFunc::sigma_plus, n) != value) {
    throw std::logic_error("sigma-plus collision family failed re-validation");
  }
  return CollisionGroup{value, {m, n}};
}

CollisionGroup family_collision_phi_plus(u64 p) {
  if (!is_prime(p) || p == 3 || p == 7) {
    throw std::domain_error("family_collision_phi_plus: p must be a prime other than 3 and 7");
  }
  if (p > std::numeric_limits<u64>::max() / 9) {
    throw std::overflow_error("family_collision_phi_plus: 9p exceeds 64 bits");
  }
  const u64 a = 7 * p;
  const u64 b = 9 * p;
  const u128 value = 7 * static_cast<u128>(p);
  if (eval_at(SeqFunc::phi_plus, a) != value ||
      eval_at(SeqFunc::phi_plus, b) != value) {
    throw std::logic_error("phi-plus collision family failed re-validation");
  }
  return CollisionGroup{value, {a, b}};
}

std::vector<ApTriple> find_3term_aps(SeqFunc func, u64 max_n, u64 max_results) {
  if (max_n < 3) throw std::domain_error("find_3term_aps: max_n must be >= 3");
  std::vector<u128> value(max_n + 1, 0);
  {
    SieveTable sieve = build_spf_sieve(std::max<u64>(2, max_n));
    for (u64 n = 1; n <= max_n; ++n) value[n] = seq_value(func, factorize(n, sieve));
  }
  std::map<u128, std::vector<u64>> positions;
  for (u64 n = 1; n <= max_n; ++n) positions[value[n]].push_back(n);

  std::vector<ApTriple> out;
  for (u64 a = 1; a + 2 <= max_n && out.size() < max_results; ++a) {
    for (u64 b = a + 1; b + 1 <= max_n && out.size() < max_results; ++b) {
      const u128 twice_fb = 2 * value[b];
      if (twice_fb < value[a]) continue;
      auto it = positions.find(twice_fb - value[a]);
      if (it == positions.end()) continue;
      for (u64 c : it->second) {
        if (c <= b) continue;
        out.push_back(ApTriple{a, b, c, value[a], value[b], value[c]});
        if (out.size() >= max_results) break;
      }
    }
  }
  return out;
}

ApTriple family_ap_sigma_plus(u32 k) {
  if (k < 1) throw std::domain_error("family_ap_sigma_plus: k must be >= 1");
  require_pow2_family_in_range(k);
  ApTriple t;
  t.a = u64{1} << k;
  t.b = u64{1} << (k + 2);
  t.c = u64{5} << k;
  t.fa = eval_at(SeqFunc::sigma_plus, t.a);
  t.fb = eval_at(SeqFunc::sigma_plus, t.b);
  t.fc = eval_at(SeqFunc::sigma_plus, t.c);
  if (2 * t.fb != t.fa + t.fc) {
    throw std::logic_error("sigma-plus progression family failed re-validation");
  }
  return t;
}

ApTriple family_ap_phi_plus(u64 p) {
  if (!is_prime(p) || p < 13) {
    throw std::domain_error("family_ap_phi_plus: p must be a prime >= 13");
  }
  if (p > std::numeric_limits<u64>::max() / 11) {
    throw std::overflow_error("family_ap_phi_plus: 11p exceeds 64 bits");
  }
  ApTriple t;
  t.a = 3 * p;
  t.b = 7 * p;
  t.c = 11 * p;
  t.fa = eval_at(SeqFunc::phi_plus, t.a);
  t.fb = eval_at(SeqFunc::phi_plus, t.b);
  t.fc = eval_at(SeqFunc::phi_plus, t.c);
  if (2 * t.fb != t.fa + t.fc) {
    throw std::logic_error("phi-plus progression family failed re-validation");
  }
  return t;
}

}  // namespace arithplus
