#include "arithplus/report_io.hpp"

#include <set>
#include <sstream>

namespace arithplus {

using nlohmann::json;

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const PrimePower& pp : f.factors) {
    factors.push_back(json::array({pp.prime, pp.exponent}));
  }
  return json{{"n", f.n}, {"factors", factors}};
}

Factorization factorization_from_json(const json& j) {
  Factorization f;
  f.n = j.at("n").get<u64>();
  for (const auto& pair : j.at("factors")) {
    f.factors.push_back(PrimePower{pair.at(0).get<u64>(), pair.at(1).get<u32>()});
  }
  return f;
}

json to_json(const Witness& w) {
  json values = json::object();
  for (const auto& [name, value] : w.values) values[name] = value;
  return json{{"n", w.n},
              {"condition", w.condition},
              {"values", values},
              {"factorization", to_json(w.factorization)}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.n = j.at("n").get<u64>();
  w.condition = j.at("condition").get<std::string>();
  for (const auto& [name, value] : j.at("values").items()) {
    w.values[name] = value.get<std::string>();
  }
  w.factorization = factorization_from_json(j.at("factorization"));
  return w;
}

json to_json(const ScanReport& report) {
  json witnesses = json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(to_json(w));
  json params = json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  return json{{"command", report.command},
              {"params", params},
              {"range", json::array({report.min, report.max})},
              {"total_checked", report.total_checked},
              {"witnesses", witnesses},
              {"skipped_overflow", report.skipped_overflow},
              {"elapsed_ms", report.elapsed_ms},
              {"engine_version", report.engine_version},
              {"notes", report.notes}};
}

ScanReport scan_report_from_json(const json& j) {
  ScanReport report;
  report.command = j.at("command").get<std::string>();
  for (const auto& [key, value] : j.at("params").items()) {
    report.params[key] = value.get<std::string>();
  }
  report.min = j.at("range").at(0).get<u64>();
  report.max = j.at("range").at(1).get<u64>();
  report.total_checked = j.at("total_checked").get<u64>();
  for (const auto& w : j.at("witnesses")) {
    report.witnesses.push_back(witness_from_json(w));
  }
  report.skipped_overflow = j.at("skipped_overflow").get<std::vector<u64>>();
  report.elapsed_ms = j.at("elapsed_ms").get<u64>();
  report.engine_version = j.at("engine_version").get<std::string>();
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

std::string format_factorization(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const PrimePower& pp : f.factors) {
    if (!out.empty()) out += '*';
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) {
      out += '^';
      out += std::to_string(pp.exponent);
    }
  }
  return out;
}

std::string witnesses_to_csv(const std::vector<Witness>& witnesses) {
  std::set<std::string> names;
  for (const Witness& w : witnesses) {
    for (const auto& [name, value] : w.values) names.insert(name);
  }
  std::string out = "n,condition";
  for (const std::string& name : names) out += "," + name;
  out += '\n';
  for (const Witness& w : witnesses) {
    out += std::to_string(w.n) + "," + w.condition;
    for (const std::string& name : names) {
      out += ',';
      auto it = w.values.find(name);
      if (it != w.values.end()) out += it->second;
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const ScanReport& report) {
  std::ostringstream out;
  out << report.command;
  for (const auto& [key, value] : report.params) {
    out << ' ' << key << '=' << value;
  }
  out << '\n';
  out << "range: [" << report.min << ", " << report.max << "]\n";
  out << "total checked: " << report.total_checked << '\n';
  out << "witnesses: " << report.witnesses.size() << '\n';
  for (const Witness& w : report.witnesses) {
    out << "  n=" << w.n << "  " << format_factorization(w.factorization);
    for (const auto& [name, value] : w.values) {
      out << "  " << name << '=' << value;
    }
    out << '\n';
  }
  if (!report.skipped_overflow.empty()) {
    out << "skipped (overflow):";
    for (u64 n : report.skipped_overflow) out << ' ' << n;
    out << '\n';
  }
  for (const std::string& note : report.notes) out << "note: " << note << '\n';
  out << "elapsed: " << report.elapsed_ms << " ms (engine "
      << report.engine_version << ")\n";
  return out.str();
}

}  // namespace arithplus
