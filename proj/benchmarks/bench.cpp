#include <benchmark/benchmark.h>

#include "arithplus/arithfun.hpp"
#include "arithplus/scan.hpp"
#include "arithplus/sequences.hpp"

using namespace arithplus;

static void BM_SieveBuild(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    SieveTable sieve = build_spf_sieve(limit);
    benchmark::DoNotOptimize(sieve.primes().size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(limit));
}
BENCHMARK(BM_SieveBuild)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_FactorizeSieved(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  SieveTable sieve = build_spf_sieve(limit);
  for (auto _ : state) {
    u64 acc = 0;
    for (u64 n = 2; n <= limit; ++n) acc += factorize(n, sieve).omega();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(limit - 1));
}
BENCHMARK(BM_FactorizeSieved)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_FactorizeSemiprime(benchmark::State& state) {
  // Worst case for the splitter: products of two similar-sized primes.
  constexpr u64 kSemiprimes[] = {
      u64{1000003} * 1000033, u64{15485863} * 15485867,
      u64{2147483647} * 2147483629, u64{99999989} * 99999971};
  size_t i = 0;
  for (auto _ : state) {
    Factorization f = factorize(kSemiprimes[i % 4]);
    benchmark::DoNotOptimize(f.factors.size());
    ++i;
  }
}
BENCHMARK(BM_FactorizeSemiprime)->Unit(benchmark::kMicrosecond);

static void BM_SigmaPlusEval(benchmark::State& state) {
  SieveTable sieve = build_spf_sieve(100000);
  u64 n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_plus(factorize(n, sieve)));
    n = n == 100000 ? 2 : n + 1;
  }
}
BENCHMARK(BM_SigmaPlusEval);

static void BM_ScanThroughput(benchmark::State& state) {
  const u64 max = static_cast<u64>(state.range(0));
  ScanOptions opt;
  opt.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    ScanReport r = scan_range(ConditionId::phi_plus_shift, 2, max, opt);
    benchmark::DoNotOptimize(r.total_checked);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(max - 1));
}
BENCHMARK(BM_ScanThroughput)
    ->Args({100000, 1})
    ->Args({100000, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_ApSearch(benchmark::State& state) {
  const u64 max = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    auto aps = find_3term_aps(SeqFunc::sigma_plus, max, 1u << 20);
    benchmark::DoNotOptimize(aps.size());
  }
}
BENCHMARK(BM_ApSearch)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
