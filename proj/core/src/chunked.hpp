#pragma once

#include <functional>
#include <vector>

#include "arithplus/factorize.hpp"
#include "arithplus/witness.hpp"

namespace arithplus::detail {

struct ChunkSink {
  std::vector<Witness> witnesses;
  std::vector<u64> skipped_overflow;
  u64 checked = 0;
};

// Drives visit(factorize(n, sieve), sink) over every n in [min, max],
// split into fixed-size chunks handed to `workers` threads. Each chunk
// owns its sink; results are merged in chunk order, so the output is
// identical for any worker count. A std::overflow_error from visit records
// n under skipped_overflow and moves on.
ChunkSink run_factored_range(u64 min, u64 max, const SieveTable& sieve,
                             u64 chunk_size, unsigned workers,
                             const std::function<void(const Factorization&, ChunkSink&)>& visit);

}  // namespace arithplus::detail
