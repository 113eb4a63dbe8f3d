#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "arithplus/sequences.hpp"
#include "arithplus/witness.hpp"

namespace arithplus {

/// One n whose function value has the form 2p - q for a prime p.
struct RepresentationHit {
  u64 q = 0;
  u64 n = 0;
  u64 p = 0;
  SeqFunc func = SeqFunc::sigma_plus;
  u128 value = 0;  // f(n), so value + q == 2p

  friend bool operator==(const RepresentationHit&, const RepresentationHit&) = default;
};

/// One data line of an OEIS b-file.
struct BFileEntry {
  long long index = 0;
  long long value = 0;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Thrown when a provided b-file disagrees with locally computed sequence
/// membership; the message names the first offending entry.
struct BFileMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every n <= max_n whose value v = f(n) is odd (v + q even is forced) with
/// (v + q)/2 prime, ascending by n. Requires q to be an odd prime >= 3;
/// std::domain_error otherwise.
std::vector<RepresentationHit> conjecture_evidence(SeqFunc func, u64 q, u64 max_n);

struct AscentCheckReport {
  u64 checked_primes = 0;           // primes 2 < p <= max_p with 2p-1 prime
  std::vector<Witness> violations;  // phi_plus(2p-1) < phi_plus(2p) failures
};

/// For every prime 2 < p <= max_p with 2p-1 prime, checks
/// phi_plus(2p-1) < phi_plus(2p) by direct evaluation. When a b-file is
/// supplied, locally computed membership (which also includes p = 2) is
/// cross-checked against it and BFileMismatchError is thrown on the first
/// disagreement. Requires max_p >= 3.
AscentCheckReport a005382_check(u64 max_p, const std::vector<BFileEntry>* bfile = nullptr);

/// Ascending primes p <= max_p with phi_plus(p) < phi_plus(p + 1). Contains
/// every prime of the form 2r - 1 (r an odd prime) up to max_p. Requires
/// max_p >= 2.
std::vector<u64> ascent_scan(u64 max_p);

/// Parses OEIS b-file text: optional '#' comment lines, blank lines ignored,
/// data lines "<index> <value>" with optional surrounding whitespace, LF or
/// CRLF. Throws std::invalid_argument naming the line on a malformed line or
/// a non-increasing index.
std::vector<BFileEntry> parse_bfile(std::string_view text);

}  // namespace arithplus
