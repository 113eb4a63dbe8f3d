#pragma once

#include <map>
#include <string>

#include "arithplus/factorize.hpp"
#include "arithplus/rational.hpp"

namespace arithplus {

/// One hit from a scan or verifier: the integer, the condition or tag it
/// satisfies, and the named values proving it. Integers and rationals are
/// stored rendered exactly ("42", "5/4") so serialization never rounds.
struct Witness {
  u64 n = 0;
  std::string condition;
  std::map<std::string, std::string> values;
  Factorization factorization;

  void put(const std::string& name, u128 v) { values[name] = to_string(v); }
  void put(const std::string& name, const Rational& r) { values[name] = to_string(r); }

  friend bool operator==(const Witness&, const Witness&) = default;
};

}  // namespace arithplus
