#include "arithplus/scan.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "arithplus/version.hpp"
#include "chunked.hpp"

namespace arithplus {

namespace {

void record_witness(ConditionId condition, const Factorization& f,
                    const Factorization* next, detail::ChunkSink& sink,
                    bool oq1_literal) {
  const u64 n = f.n;
  Witness w;
  w.n = n;
  w.condition = std::string(to_string(condition));
  w.factorization = f;
  switch (condition) {
    case ConditionId::lehmer: {
      if (!is_lehmer(f)) return;
      const u64 ph = phi(f);
      w.put("phi", ph);
      w.put("quotient", (n - 1) / ph);
      break;
    }
    case ConditionId::deaconescu: {
      if (!is_deaconescu(f)) return;
      const u64 s2 = schemmel2(f);
      const u64 ph = phi(f);
      w.put("schemmel2", s2);
      w.put("phi", ph);
      if (s2 > 0) w.put("quotient", (ph - 1) / s2);
      break;
    }
    case ConditionId::sigma_shift: {
      if (oq1_literal) {
        // Open-question wording: does (n+1) divide sigma(n+1)?
        const u128 s = sigma(*next);
        if (!divides(static_cast<u128>(n) + 1, s)) return;
        w.put("sigma_next", s);
        w.put("multiplier", s / (static_cast<u128>(n) + 1));
      } else {
        auto k = sigma_shift_multiplier(f);
        if (!k) return;
        w.put("sigma", sigma(f));
        w.put("multiplier", *k);
      }
      break;
    }
    case ConditionId::sigma_plus_shift: {
      if (!sigma_plus_shift_holds(f)) return;
      const u128 sp = sigma_plus(f);
      w.put("sigma_plus", sp);
      w.put("multiplier", sp / (static_cast<u128>(n) + 1));
      break;
    }
    case ConditionId::phi_plus_shift: {
      if (!phi_plus_shift_holds(f)) return;
      const u64 pp = phi_plus(f);
      w.put("phi_plus", pp);
      w.put("quotient", (n - 1) / pp);
      break;
    }
  }
  sink.witnesses.push_back(std::move(w));
}

}  // namespace

ScanReport scan_range(ConditionId condition, u64 min, u64 max,
                      const ScanOptions& options) {
  if (min < 2 || min > max) {
    throw std::invalid_argument("scan_range: need 2 <= min <= max");
  }
  const bool literal =
      options.oq1_literal && condition == ConditionId::sigma_shift;
  const u64 sieve_limit =
      std::max(literal ? max + 1 : max, options.sieve_limit);
  if (sieve_limit > sieve_cap()) {
    throw std::out_of_range("scan_range: max exceeds the sieve cap");
  }

  const auto started = std::chrono::steady_clock::now();
  SieveTable sieve = build_spf_sieve(sieve_limit);

  auto visit = [&](const Factorization& f, detail::ChunkSink& sink) {
    if (options.composite_only && !f.is_composite()) return;
    sink.checked += 1;
    if (literal) {
      Factorization next = factorize(f.n + 1, sieve);
      record_witness(condition, f, &next, sink, true);
    } else {
      record_witness(condition, f, nullptr, sink, false);
    }
  };
  detail::ChunkSink merged = detail::run_factored_range(
      min, max, sieve, options.chunk_size, options.workers, visit);

  ScanReport report;
  report.command = "scan";
  report.min = min;
  report.max = max;
  report.total_checked = merged.checked;
  report.witnesses = std::move(merged.witnesses);
  report.skipped_overflow = std::move(merged.skipped_overflow);
  report.engine_version = std::string(kEngineVersion);
  report.params["condition"] = std::string(to_string(condition));
  report.params["min"] = std::to_string(min);
  report.params["max"] = std::to_string(max);
  // Worker count and chunk size are execution details, not parameters of the
  // result; leaving them out keeps reports byte-identical across -j settings.
  report.params["composite_only"] = options.composite_only ? "true" : "false";
  if (literal) {
    report.params["oq1_literal"] = "true";
    report.notes.push_back(
        "sigma-shift ran in literal open-question form: testing (n+1) | sigma(n+1)");
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report.elapsed_ms = static_cast<u64>(
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  return report;
}

}  // namespace arithplus
