#include "arithplus/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arithplus/predicates.hpp"
#include "chunked.hpp"

namespace arithplus {

namespace {

constexpr u64 kVerifyChunk = u64{1} << 16;

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Factorization two_prime_shape(u64 p, u32 ep, u64 q, u32 eq, u64 n) {
  Factorization f;
  f.n = n;
  if (p < q) {
    f.factors = {{p, ep}, {q, eq}};
  } else {
    f.factors = {{q, eq}, {p, ep}};
  }
  return f;
}

// Distinct prime pairs p < q with p*q <= bound, in ascending n order after a
// final sort (enumeration order is by p, then q).
template <typename Fn>
void for_each_semiprime(const SieveTable& primes, u64 bound, Fn&& fn) {
  for (u64 p : primes.primes()) {
    if (p * p >= bound) break;
    const u64 qmax = bound / p;
    for (u64 q : primes.primes()) {
      if (q <= p) continue;
      if (q > qmax) break;
      fn(p, q);
    }
  }
}

// Distinct prime pairs with p^2 * q <= bound (q may be smaller than p).
template <typename Fn>
void for_each_p2q(const SieveTable& primes, u64 bound, Fn&& fn) {
  for (u64 p : primes.primes()) {
    if (p * p > bound / 2) break;
    const u64 qmax = bound / (p * p);
    for (u64 q : primes.primes()) {
      if (q > qmax) break;
      if (q == p) continue;
      fn(p, q);
    }
  }
}

VerifyOutcome verify_pq(TheoremId id, u64 bound) {
  const bool plus = id == TheoremId::pq_sigma_plus;
  SieveTable primes = build_spf_sieve(std::max<u64>(2, bound / 2));
  VerifyOutcome out;
  for_each_semiprime(primes, bound, [&](u64 p, u64 q) {
    out.checked += 1;
    const u64 n = p * q;
    const u128 value = plus ? static_cast<u128>(p + 2) * (q + 2)
                            : static_cast<u128>(p + 1) * (q + 1);
    if (!divides(static_cast<u128>(n) + 1, value)) return;
    Witness w;
    w.n = n;
    w.condition = std::string(to_string(id));
    w.put("p", p);
    w.put("q", q);
    w.put(plus ? "sigma_plus" : "sigma", value);
    w.factorization = two_prime_shape(p, 1, q, 1, n);
    out.witnesses.push_back(std::move(w));
  });
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.n < b.n; });
  return out;
}

VerifyOutcome verify_p2q(TheoremId id, u64 bound) {
  const bool plus = id == TheoremId::p2q_sigma_plus;
  SieveTable primes = build_spf_sieve(std::max<u64>(2, bound / 2));
  VerifyOutcome out;
  for_each_p2q(primes, bound, [&](u64 p, u64 q) {
    out.checked += 1;
    const u64 n = p * p * q;
    const u128 value = plus ? static_cast<u128>(2 + p + p * p) * (q + 2)
                            : static_cast<u128>(1 + p + p * p) * (q + 1);
    if (value != 2 * (static_cast<u128>(n) + 1)) return;
    Witness w;
    w.n = n;
    w.condition = std::string(to_string(id));
    w.put("p", p);
    w.put("q", q);
    w.put(plus ? "sigma_plus" : "sigma", value);
    w.put("multiplier", 2);
    w.factorization = two_prime_shape(p, 2, q, 1, n);
    out.witnesses.push_back(std::move(w));
  });
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.n < b.n; });
  return out;
}

VerifyOutcome verify_prime_powers(u64 bound) {
  SieveTable primes = build_spf_sieve(std::max<u64>(2, isqrt_u64(bound)));
  VerifyOutcome out;
  for (u64 p : primes.primes()) {
    Factorization f;
    f.n = p * p;
    f.factors = {{p, 2}};
    while (f.n <= bound) {
      out.checked += 1;
      const u64 pp = phi_plus(f);
      const u32 r = f.factors[0].exponent;
      // n = 4 satisfies the theorem's conclusion (r = 2, p = 2), so it is
      // not a counterexample.
      if (divides(pp, f.n - 1) && !(p == 2 && r == 2)) {
        Witness w;
        w.n = f.n;
        w.condition = std::string(to_string(TheoremId::prime_power_phi_plus));
        w.put("p", p);
        w.put("r", r);
        w.put("phi_plus", pp);
        w.put("quotient", (f.n - 1) / pp);
        w.factorization = f;
        out.witnesses.push_back(std::move(w));
      }
      if (f.n > bound / p) break;
      f.n *= p;
      f.factors[0].exponent++;
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.n < b.n; });
  return out;
}

void put_bound_report(Witness& w, const BoundReport& r) {
  w.put("lower", r.lower);
  w.put("middle", r.middle);
  w.put("upper", r.upper);
  w.put("lower_ok", static_cast<u128>(r.lower_ok ? 1 : 0));
  w.put("upper_ok", static_cast<u128>(r.upper_ok ? 1 : 0));
}

VerifyOutcome verify_over_range(TheoremId id, u64 min, u64 bound,
                                unsigned workers) {
  SieveTable sieve = build_spf_sieve(std::max<u64>(2, bound));
  auto visit = [id](const Factorization& f, detail::ChunkSink& sink) {
    switch (id) {
      case TheoremId::squarefree_phi_plus: {
        if (!f.is_squarefree()) return;
        sink.checked += 1;
        const u64 pp = phi_plus(f);
        if (!divides(pp, f.n - 1)) return;
        Witness w;
        w.n = f.n;
        w.condition = std::string(to_string(id));
        w.put("phi_plus", pp);
        w.put("quotient", (f.n - 1) / pp);
        w.factorization = f;
        sink.witnesses.push_back(std::move(w));
        return;
      }
      case TheoremId::sigma_plus_bounds: {
        sink.checked += 1;
        const BoundReport r = check_sigma_plus_bounds(f);
        if (r.lower_ok && r.upper_ok) return;
        Witness w;
        w.n = f.n;
        w.condition = std::string(to_string(id));
        put_bound_report(w, r);
        w.factorization = f;
        sink.witnesses.push_back(std::move(w));
        return;
      }
      case TheoremId::phi_plus_bounds: {
        if (!f.is_powerful() || f.n < 4) return;
        sink.checked += 1;
        const BoundReport r = check_phi_plus_bounds(f);
        if (r.lower_ok && r.upper_ok) return;
        Witness w;
        w.n = f.n;
        w.condition = std::string(to_string(id));
        put_bound_report(w, r);
        w.factorization = f;
        sink.witnesses.push_back(std::move(w));
        return;
      }
      default:
        return;
    }
  };
  detail::ChunkSink merged =
      detail::run_factored_range(min, bound, sieve, kVerifyChunk, workers, visit);
  return VerifyOutcome{std::move(merged.witnesses), merged.checked};
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::pq_sigma: return "pq-sigma";
    case TheoremId::pq_sigma_plus: return "pq-sigma-plus";
    case TheoremId::p2q_sigma: return "p2q-sigma";
    case TheoremId::p2q_sigma_plus: return "p2q-sigma-plus";
    case TheoremId::squarefree_phi_plus: return "squarefree-phi-plus";
    case TheoremId::prime_power_phi_plus: return "prime-power-phi-plus";
    case TheoremId::sigma_plus_bounds: return "sigma-plus-bounds";
    case TheoremId::phi_plus_bounds: return "phi-plus-bounds";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId id : kAllTheorems) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

BoundReport check_sigma_plus_bounds(const Factorization& f) {
  if (f.n < 2) throw std::domain_error("check_sigma_plus_bounds: need n >= 2");
  const u128 s = sigma(f);
  const u128 sp = sigma_plus(f);
  BoundReport r;
  r.n = f.n;
  r.lower = Rational::make(s, 2 * static_cast<u128>(f.n));
  r.middle = Rational::make(sp, static_cast<u128>(f.n) + 1);
  r.upper = Rational::make(checked_mul(s, u128{1} << f.omega()), f.n);
  r.lower_ok = r.lower < r.middle;
  r.upper_ok = r.middle < r.upper;
  return r;
}

BoundReport check_phi_plus_bounds(const Factorization& f) {
  if (f.n < 4 || !f.is_powerful()) {
    throw std::domain_error("check_phi_plus_bounds: need powerful n >= 4");
  }
  Rational lower{1, 1};
  for (const PrimePower& pp : f.factors) {
    const u128 p2 = static_cast<u128>(pp.prime) * pp.prime;
    lower = mul(lower, Rational::make(p2 + 1, p2));
  }
  BoundReport r;
  r.n = f.n;
  r.lower = lower;
  r.middle = Rational::make(f.n - 1, phi_plus(f));
  r.upper = Rational{u128{1} << f.omega(), 1};
  r.lower_ok = r.lower <= r.middle;
  r.upper_ok = r.middle < r.upper;
  return r;
}

VerifyOutcome verify_theorem_report(TheoremId id, u64 bound, unsigned workers) {
  if (bound < 4) throw std::invalid_argument("verify_theorem: bound must be >= 4");
  switch (id) {
    case TheoremId::pq_sigma:
    case TheoremId::pq_sigma_plus:
      return verify_pq(id, bound);
    case TheoremId::p2q_sigma:
    case TheoremId::p2q_sigma_plus:
      return verify_p2q(id, bound);
    case TheoremId::prime_power_phi_plus:
      return verify_prime_powers(bound);
    case TheoremId::squarefree_phi_plus:
    case TheoremId::sigma_plus_bounds:
      return verify_over_range(id, 2, bound, workers);
    case TheoremId::phi_plus_bounds:
      return verify_over_range(id, 4, bound, workers);
  }
  throw std::invalid_argument("verify_theorem: unknown tag");
}

std::vector<Witness> verify_theorem(TheoremId id, u64 bound, unsigned workers) {
  return verify_theorem_report(id, bound, workers).witnesses;
}

}  // namespace arithplus
