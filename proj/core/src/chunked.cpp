#include "chunked.hpp"

#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace arithplus::detail {

namespace {

void consume_chunk(u64 lo, u64 hi, const SieveTable& sieve,
                   const std::function<void(const Factorization&, ChunkSink&)>& visit,
                   ChunkSink& sink) {
  for (u64 n = lo; n <= hi; ++n) {
    Factorization f = factorize(n, sieve);
    try {
      visit(f, sink);
    } catch (const std::overflow_error&) {
      sink.skipped_overflow.push_back(n);
    }
  }
}

}  // namespace

ChunkSink run_factored_range(u64 min, u64 max, const SieveTable& sieve,
                             u64 chunk_size, unsigned workers,
                             const std::function<void(const Factorization&, ChunkSink&)>& visit) {
  if (min > max) return {};
  if (chunk_size == 0) throw std::invalid_argument("chunk_size must be positive");

  const u64 span = max - min + 1;
  const u64 chunk_count = (span + chunk_size - 1) / chunk_size;

  std::vector<ChunkSink> parts(chunk_count);
  auto chunk_bounds = [&](u64 idx) {
    u64 lo = min + idx * chunk_size;
    u64 hi = (idx + 1 == chunk_count) ? max : lo + chunk_size - 1;
    return std::pair<u64, u64>{lo, hi};
  };

  if (workers <= 1 || chunk_count == 1) {
    for (u64 idx = 0; idx < chunk_count; ++idx) {
      auto [lo, hi] = chunk_bounds(idx);
      consume_chunk(lo, hi, sieve, visit, parts[idx]);
    }
  } else {
    std::atomic<u64> next{0};
    auto worker = [&] {
      for (;;) {
        u64 idx = next.fetch_add(1, std::memory_order_relaxed);
        if (idx >= chunk_count) return;
        auto [lo, hi] = chunk_bounds(idx);
        consume_chunk(lo, hi, sieve, visit, parts[idx]);
      }
    };
    unsigned count = workers;
    if (count > chunk_count) count = static_cast<unsigned>(chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ChunkSink merged;
  u64 covered = 0;
  for (u64 idx = 0; idx < chunk_count; ++idx) {
    auto [lo, hi] = chunk_bounds(idx);
    covered += hi - lo + 1;
    auto& part = parts[idx];
    merged.checked += part.checked;
    merged.witnesses.insert(merged.witnesses.end(),
                            std::make_move_iterator(part.witnesses.begin()),
                            std::make_move_iterator(part.witnesses.end()));
    merged.skipped_overflow.insert(merged.skipped_overflow.end(),
                                   part.skipped_overflow.begin(),
                                   part.skipped_overflow.end());
  }
  assert(covered == span);
  (void)covered;
  return merged;
}

}  // namespace arithplus::detail
