#pragma once

#include <vector>

#include "cantor/interval_set.hpp"
#include "json.hpp"

namespace cantor {

// JSON encodings used by the command-line tool.  Exactness rule: every
// number that matters is a decimal *string* (numerators, denominators,
// "p/q" fractions), never a JSON float, so documents round-trip to the
// exact rationals.  Decimal renderings are truncated, never rounded, and
// always carry their digit count.

// {"fraction": "p/q", "decimal": "0.d...", "digits": n}
nlohmann::json rational_json(const Rational& x, int digits = 12);
Rational rational_from_json(const nlohmann::json& j);

// [[lo_num, lo_den, hi_num, hi_den], ...], each entry a decimal string.
nlohmann::json interval_set_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

// Same four-string shape for open gap intervals.
nlohmann::json gaps_json(const std::vector<OpenInterval>& gaps);

}  // namespace cantor
