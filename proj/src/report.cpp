#include "padicl/report.hpp"

#include <ostream>

namespace padicl {

Json rational_json(const Rational& x) {
  Json j;
  j["num"] = x.get_num().get_str();
  j["den"] = x.get_den().get_str();
  return j;
}

Json padic_json(const PadicApprox& x) {
  Json j;
  j["p"] = x.prime();
  if (x.is_zero()) j["val"] = "inf";
  else j["val"] = x.valuation();
  j["unit"] = x.is_zero() ? std::string("0") : x.unit().get_str();
  j["prec"] = x.precision();
  return j;
}

Json cyclo_json(const CyclotomicElement& x) {
  Json j;
  j["m"] = x.order();
  Json c = Json::array();
  for (const auto& q : x.coords()) c.push_back(to_string(q));
  j["coords"] = c;
  return j;
}

Json CheckReport::to_json(bool with_timing) const {
  Json j;
  j["check"] = name;
  j["params"] = params;
  j["expected"] = expected;
  j["observed"] = observed;
  j["verdict"] = pass ? "pass" : "fail";
  if (!details.empty()) j["details"] = details;
  if (with_timing) j["runtime_ms"] = runtime_ms;
  return j;
}

void emit_report(std::ostream& os, const std::vector<CheckReport>& reports, bool with_timing) {
  for (const auto& r : reports) os << r.to_json(with_timing).dump() << '\n';
  os.flush();
  if (!os) throw std::runtime_error("emit_report: write failed");
}

}  // namespace padicl
