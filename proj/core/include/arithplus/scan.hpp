#pragma once

#include <map>
#include <string>
#include <vector>

#include "arithplus/predicates.hpp"
#include "arithplus/witness.hpp"

namespace arithplus {

struct ScanOptions {
  bool composite_only = false;
  unsigned workers = 1;
  // Tests the open question's literal wording (n+1) | sigma(n+1) instead of
  // the condition the surrounding text studies, (n+1) | sigma(n). Only
  // meaningful for sigma_shift.
  bool oq1_literal = false;
  u64 chunk_size = u64{1} << 16;
  // When larger than the scan needs, the sieve is built to this size instead
  // (so several scans can be sized alike); never shrinks below the needed
  // bound.
  u64 sieve_limit = 0;
};

/// Everything one scan produced, stable across worker counts except
/// elapsed_ms.
struct ScanReport {
  std::string command;
  std::map<std::string, std::string> params;
  u64 min = 0;
  u64 max = 0;
  u64 total_checked = 0;
  std::vector<Witness> witnesses;  // ascending by n
  std::vector<u64> skipped_overflow;
  u64 elapsed_ms = 0;
  std::string engine_version;
  std::vector<std::string> notes;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Tests condition on every n in [min, max] (composites only when flagged)
/// against a shared smallest-prime-factor sieve, in fixed-size chunks that
/// may run on several threads. Witnesses come back complete and ascending
/// regardless of worker count. Requires 2 <= min <= max; throws
/// std::out_of_range before doing any work if max exceeds the sieve cap.
ScanReport scan_range(ConditionId condition, u64 min, u64 max,
                      const ScanOptions& options = {});

}  // namespace arithplus
