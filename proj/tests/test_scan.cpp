#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "arithplus/oracles.hpp"
#include "arithplus/scan.hpp"

using namespace arithplus;

namespace {

std::vector<u64> witness_ns(const ScanReport& r) {
  std::vector<u64> ns;
  for (const Witness& w : r.witnesses) ns.push_back(w.n);
  return ns;
}

}  // namespace

TEST_CASE("sigma-shift over composites finds 20 below 100") {
  ScanOptions opt;
  opt.composite_only = true;
  ScanReport r = scan_range(ConditionId::sigma_shift, 2, 100, opt);
  CHECK(witness_ns(r) == std::vector<u64>{20});
  CHECK(r.total_checked == 74);  // 99 integers minus 25 primes
  CHECK(r.witnesses[0].values.at("sigma") == "42");
  CHECK(r.witnesses[0].values.at("multiplier") == "2");
  CHECK(r.params.at("condition") == "sigma-shift");
  CHECK(r.params.at("composite_only") == "true");
  CHECK(r.skipped_overflow.empty());
  CHECK(r.command == "scan");
}

TEST_CASE("phi-plus-shift finds only 4 below 10^4") {
  ScanReport r = scan_range(ConditionId::phi_plus_shift, 2, 10000);
  CHECK(witness_ns(r) == std::vector<u64>{4});
  CHECK(r.total_checked == 9999);
  CHECK(r.witnesses[0].values.at("phi_plus") == "3");
  CHECK(r.witnesses[0].values.at("quotient") == "1");
}

TEST_CASE("lehmer and deaconescu come back empty below 3000") {
  ScanOptions opt;
  opt.composite_only = true;
  CHECK(scan_range(ConditionId::lehmer, 2, 3000, opt).witnesses.empty());
  CHECK(scan_range(ConditionId::deaconescu, 2, 3000, opt).witnesses.empty());
}

TEST_CASE("scan agrees with a direct oracle sweep") {
  for (ConditionId cond : kAllConditions) {
    ScanReport r = scan_range(cond, 2, 2000);
    std::vector<u64> brute;
    for (u64 n = 2; n <= 2000; ++n) {
      bool hit = false;
      const Factorization f = factorize(n);
      switch (cond) {
        case ConditionId::lehmer:
          hit = f.is_composite() && divides(oracle_phi(n), n - 1);
          break;
        case ConditionId::deaconescu:
          hit = f.is_composite() &&
                divides(oracle_schemmel2(n), oracle_phi(n) - 1);
          break;
        case ConditionId::sigma_shift:
          hit = oracle_sigma(n) % (n + 1) == 0;
          break;
        case ConditionId::sigma_plus_shift:
          hit = oracle_sigma_plus(n) % (n + 1) == 0;
          break;
        case ConditionId::phi_plus_shift:
          hit = divides(oracle_phi_plus(n), n - 1);
          break;
      }
      if (hit) brute.push_back(n);
    }
    CHECK(witness_ns(r) == brute);
  }
}

TEST_CASE("reports are identical for any worker or chunk configuration") {
  for (ConditionId cond : kAllConditions) {
    ScanOptions base;
    ScanReport one = scan_range(cond, 2, 10000, base);

    ScanOptions many = base;
    many.workers = 8;
    many.chunk_size = 512;
    ScanReport eight = scan_range(cond, 2, 10000, many);

    // elapsed_ms is the one legitimately unstable field.
    one.elapsed_ms = 0;
    eight.elapsed_ms = 0;
    CHECK(one == eight);
  }
}

TEST_CASE("open-question literal mode") {
  ScanOptions opt;
  opt.oq1_literal = true;
  ScanReport r = scan_range(ConditionId::sigma_shift, 2, 100, opt);
  // (n+1) | sigma(n+1) means n+1 is multiply-perfect: 6 and 28 below 101.
  CHECK(witness_ns(r) == std::vector<u64>{5, 27});
  CHECK(r.params.at("oq1_literal") == "true");
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("sigma(n+1)") != std::string::npos);
  CHECK(r.witnesses[0].values.at("sigma_next") == "12");
  CHECK(r.witnesses[0].values.at("multiplier") == "2");

  ScanOptions comp = opt;
  comp.composite_only = true;
  CHECK(witness_ns(scan_range(ConditionId::sigma_shift, 2, 100, comp)) ==
        std::vector<u64>{27});

  // The flag is ignored for other conditions.
  ScanReport ph = scan_range(ConditionId::phi_plus_shift, 2, 100, opt);
  CHECK(ph.params.find("oq1_literal") == ph.params.end());
  CHECK(witness_ns(ph) == std::vector<u64>{4});
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(scan_range(ConditionId::lehmer, 1, 100), std::invalid_argument);
  CHECK_THROWS_AS(scan_range(ConditionId::lehmer, 50, 10), std::invalid_argument);
  CHECK_THROWS_AS(scan_range(ConditionId::lehmer, 2, sieve_cap() + 1),
                  std::out_of_range);
}

TEST_CASE("sieve_limit floor never changes results") {
  ScanOptions small;
  ScanReport a = scan_range(ConditionId::sigma_shift, 2, 500, small);
  ScanOptions padded;
  padded.sieve_limit = 100000;
  ScanReport b = scan_range(ConditionId::sigma_shift, 2, 500, padded);
  a.elapsed_ms = b.elapsed_ms = 0;
  CHECK(a == b);
}

TEST_CASE("single-n ranges work") {
  ScanReport r = scan_range(ConditionId::sigma_shift, 20, 20);
  CHECK(witness_ns(r) == std::vector<u64>{20});
  CHECK(r.total_checked == 1);
}
