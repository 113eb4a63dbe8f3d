#include "arithplus/conjectures.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "arithplus/predicates.hpp"

namespace arithplus {

namespace {

bool is_odd_prime(u64 q) { return q >= 3 && q % 2 == 1 && is_prime(q); }

// Primes p <= max_p whose companion 2p-1 is also prime (A005382 membership;
// p = 2 qualifies via 2*2-1 = 3).
std::vector<u64> companion_primes(u64 max_p, const SieveTable& sieve) {
  std::vector<u64> out;
  for (u64 p : sieve.primes()) {
    if (p > max_p) break;
    if (is_prime(2 * p - 1)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<RepresentationHit> conjecture_evidence(SeqFunc func, u64 q, u64 max_n) {
  if (!is_odd_prime(q)) {
    throw std::domain_error("conjecture_evidence: q must be an odd prime >= 3");
  }
  SieveTable sieve = build_spf_sieve(std::max<u64>(2, max_n));
  std::vector<RepresentationHit> out;
  for (u64 n = 1; n <= max_n; ++n) {
    const u128 v = seq_value(func, factorize(n, sieve));
    if (v % 2 == 0) continue;  // v + q must be even for p to be an integer
    const u128 p2 = (v + q) / 2;
    if (p2 > std::numeric_limits<u64>::max()) {
      throw std::overflow_error("conjecture_evidence: candidate p exceeds 64 bits");
    }
    const u64 p = static_cast<u64>(p2);
    if (!is_prime(p)) continue;
    out.push_back(RepresentationHit{q, n, p, func, v});
  }
  return out;
}

AscentCheckReport a005382_check(u64 max_p, const std::vector<BFileEntry>* bfile) {
  if (max_p < 3) throw std::domain_error("a005382_check: max_p must be >= 3");
  SieveTable sieve = build_spf_sieve(2 * max_p);
  std::vector<u64> members = companion_primes(max_p, sieve);

  if (bfile != nullptr) {
    // The b-file lists the sequence from its start; compare elementwise as
    // far as both sides reach.
    size_t i = 0;
    for (const BFileEntry& e : *bfile) {
      if (e.value < 0 || static_cast<u64>(e.value) > max_p) break;
      if (i >= members.size()) {
        throw BFileMismatchError("b-file entry " + std::to_string(e.index) +
                                 " has value " + std::to_string(e.value) +
                                 " beyond the locally computed sequence");
      }
      if (members[i] != static_cast<u64>(e.value)) {
        throw BFileMismatchError(
            "b-file entry " + std::to_string(e.index) + " has value " +
            std::to_string(e.value) + " but local computation gives " +
            std::to_string(members[i]));
      }
      ++i;
    }
    if (i < members.size() && !bfile->empty() &&
        bfile->back().value >= 0 &&
        static_cast<u64>(bfile->back().value) >= members[i]) {
      throw BFileMismatchError(
          "b-file is missing locally computed member " +
          std::to_string(members[i]) + " (after entry " +
          std::to_string(bfile->back().index) + ")");
    }
  }

  AscentCheckReport report;
  for (u64 p : members) {
    if (p <= 2) continue;  // the inequality needs odd p: phi_plus(2p) = 2p
    const u64 q = 2 * p - 1;
    const u64 left = phi_plus(factorize(q, sieve));
    const u64 right = phi_plus(factorize(q + 1, sieve));
    ++report.checked_primes;
    if (left < right) continue;
    Witness w;
    w.n = q;
    w.condition = "a005382-ascent";
    w.put("p", p);
    w.put("phi_plus_q", left);
    w.put("phi_plus_q_plus_1", right);
    w.factorization = factorize(q, sieve);
    report.violations.push_back(std::move(w));
  }
  return report;
}

std::vector<u64> ascent_scan(u64 max_p) {
  if (max_p < 2) throw std::domain_error("ascent_scan: max_p must be >= 2");
  SieveTable sieve = build_spf_sieve(max_p + 1);
  std::vector<u64> out;
  for (u64 p : sieve.primes()) {
    if (p > max_p) break;
    if (phi_plus(factorize(p, sieve)) < phi_plus(factorize(p + 1, sieve))) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> out;
  size_t pos = 0;
  long long line_no = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    size_t start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;  // blank
    if (line[start] == '#') continue;               // comment
    size_t end = line.find_last_not_of(" \t");
    std::string_view body = line.substr(start, end - start + 1);

    const char* cur = body.data();
    const char* last = body.data() + body.size();
    BFileEntry entry;
    auto idx = std::from_chars(cur, last, entry.index);
    if (idx.ec != std::errc{} || idx.ptr == last || (*idx.ptr != ' ' && *idx.ptr != '\t')) {
      throw std::invalid_argument("b-file parse error at line " +
                                  std::to_string(line_no));
    }
    cur = idx.ptr;
    while (cur != last && (*cur == ' ' || *cur == '\t')) ++cur;
    auto val = std::from_chars(cur, last, entry.value);
    if (val.ec != std::errc{} || val.ptr != last) {
      throw std::invalid_argument("b-file parse error at line " +
                                  std::to_string(line_no));
    }
    if (!out.empty() && entry.index <= out.back().index) {
      throw std::invalid_argument("b-file format error at line " +
                                  std::to_string(line_no) +
                                  ": non-increasing index");
    }
    out.push_back(entry);
  }
  return out;
}

}  // namespace arithplus
