#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arithplus/scan.hpp"

namespace arithplus {

// Factorizations serialize as [[prime, exponent], ...].
nlohmann::json to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// {command, params, range, total_checked, witnesses[], skipped_overflow[],
///  elapsed_ms, engine_version, notes[]} — parsing the emitted object
/// reproduces every field.
nlohmann::json to_json(const ScanReport& report);
ScanReport scan_report_from_json(const nlohmann::json& j);

/// "2^2*5" style; "1" for the empty factorization.
std::string format_factorization(const Factorization& f);

/// One row per witness; columns are n, condition, then the sorted union of
/// value names across all rows (missing cells empty).
std::string witnesses_to_csv(const std::vector<Witness>& witnesses);

std::string to_text(const ScanReport& report);

}  // namespace arithplus
