#include "cantor/output.hpp"

#include <stdexcept>
#include <string>

namespace cantor {
namespace {

nlohmann::json four_strings(const Rational& lo, const Rational& hi) {
  return nlohmann::json::array({lo.get_num().get_str(), lo.get_den().get_str(),
                                hi.get_num().get_str(),
                                hi.get_den().get_str()});
}

Rational rational_from_strings(const nlohmann::json& num,
                               const nlohmann::json& den) {
  if (!num.is_string() || !den.is_string())
    throw std::invalid_argument("interval entries must be decimal strings");
  const Rational d = parse_rational(den.get<std::string>());
  if (d == 0) throw std::invalid_argument("interval denominator is zero");
  return parse_rational(num.get<std::string>()) / d;
}

}  // namespace

nlohmann::json rational_json(const Rational& x, int digits) {
  return {{"fraction", fraction_string(x)},
          {"decimal", decimal_string(x, digits)},
          {"digits", digits}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("fraction") || !j["fraction"].is_string())
    throw std::invalid_argument("expected an object with a \"fraction\" field");
  return parse_rational(j["fraction"].get<std::string>());
}

nlohmann::json interval_set_json(const IntervalSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : s.members()) out.push_back(four_strings(m.lo, m.hi));
  return out;
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("expected an array of intervals");
  std::vector<Interval> members;
  members.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument(
          "each interval must be [lo_num, lo_den, hi_num, hi_den]");
    members.emplace_back(rational_from_strings(entry[0], entry[1]),
                         rational_from_strings(entry[2], entry[3]));
  }
  return IntervalSet(std::move(members));
}

nlohmann::json gaps_json(const std::vector<OpenInterval>& gaps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : gaps) out.push_back(four_strings(g.lo, g.hi));
  return out;
}

}  // namespace cantor
