#pragma once

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "frobcalc/tate/series.hpp"

namespace frobcalc {

/// Parses `(1 + t^(1/2))*X1^2*X2 + t*X2 + O(deg 7; t^64)`. `X` means X1.
/// nvars = 0 infers the variable count from the largest index used; the
/// ramification is the lcm of `d` and all exponent denominators. Without an
/// O-term the degree cap is the largest degree present and the precision is
/// `precision` whole powers of t (default_precision() if absent).
RestrictedSeries parse_series(std::uint32_t p, std::string_view text, std::uint32_t d = 1, std::size_t nvars = 0,
                              std::optional<std::int64_t> precision = std::nullopt);

/// {"p", "d", "nvars", "degree_cap", "precision": [num, den],
///  "terms": [{"exponents", "coefficient"}], "text"}.
nlohmann::json series_to_json(const RestrictedSeries& f);
RestrictedSeries series_from_json(const nlohmann::json& j);

}  // namespace frobcalc
