#pragma once

#include <cstdint>
#include <optional>

#include "frobcalc/tate/series.hpp"

namespace frobcalc {

/// N_g: the largest index whose coefficient attains the Gauss valuation of
/// g in T_1. Throws PrecisionError if g vanishes to its precision.
std::uint32_t largest_norm_index(const RestrictedSeries& g);

struct T1Division {
  RestrictedSeries quotient;
  /// A polynomial of degree < N_g.
  RestrictedSeries remainder;
  std::uint32_t n_g = 0;
  /// f = q g + r holds modulo t^P, P in units of 1/d.
  std::int64_t precision_units = 0;
  std::size_t rounds = 0;
};

/// Division f = q g + r in T_1 by leading-part reduction. Each round divides
/// the residue polynomial of the residual by that of g over F_p[X] and
/// subtracts the lift; the residual valuation must strictly increase every
/// round. The inputs are read as polynomials (their stored terms). Works to
/// P = min(target, N_f, N_g), target in whole powers of t
/// (default_precision() if absent).
T1Division euclid_div_T1(const RestrictedSeries& f, const RestrictedSeries& g,
                         std::optional<std::int64_t> target = std::nullopt);

}  // namespace frobcalc
