#pragma once

#include "padicl/cyclotomic.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace padicl {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& x);       ///< {"num", "den"} as decimal strings
Json padic_json(const PadicApprox& x);       ///< {"p", "val", "unit", "prec"}
Json cyclo_json(const CyclotomicElement& x); ///< {"m", "coords"}

/// Outcome of one executable check. The verdict is computed by the check itself.
struct CheckReport {
  std::string name;
  Json params = Json::object();
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_ms = 0;
  Json details = Json::object();

  /// Runtime is excluded unless asked for, so repeated runs stay byte-identical.
  Json to_json(bool with_timing = false) const;
};

/// One JSON object per line in the given order.
void emit_report(std::ostream& os, const std::vector<CheckReport>& reports, bool with_timing = false);

}  // namespace padicl
