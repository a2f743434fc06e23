#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "frobcalc/nafield/laurent.hpp"

namespace frobcalc {

/// Parses `t^(-2) + 3*t^(1/2) + O(t^5)`. The ramification is the lcm of
/// `d` and every exponent denominator. Without an O-term the result is exact.
LaurentElement parse_laurent(std::uint32_t p, std::string_view text, std::uint32_t d = 1);

/// {"p", "d", "terms": [[numerator, d, coefficient], ...], "precision": [num, den] or null}.
nlohmann::json laurent_to_json(const LaurentElement& x);
LaurentElement laurent_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json valuation_to_json(const Valuation& v);

}  // namespace frobcalc
