#pragma once

#include <vector>

#include "frobcalc/kernels.hpp"
#include "frobcalc/nafield/orthogonal.hpp"
#include "frobcalc/tate/series.hpp"

namespace frobcalc {

/// T_n(k^(1/p)) -> T_n(k): projects every coefficient onto its t^0 component
/// of k^(1/p) = ⊕_j k t^(j/p). A T_n(k)-linear left inverse of the inclusion.
/// Accepts d = p, or d = 1 (an element of T_n(k), returned unchanged).
RestrictedSeries coefficientwise_split(const RestrictedSeries& f);

struct SplitCertificate {
  /// Threshold w: coefficients with v <= w form the truncation f_eps.
  Rational epsilon_valuation;
  RestrictedSeries truncation;
  /// Orthogonal basis x_i of the k-span of the coefficients of f_eps,
  /// scaled so v(x_i) lies in (-1, 0].
  OrthogonalBasis basis;
  /// phi_i(f) in T_n(k): the i-th coordinate functional applied to every
  /// coefficient of f.
  std::vector<RestrictedSeries> functional_values;
  /// g_eps = sum_i phi_i(f) x_i.
  RestrictedSeries approximant;
  /// v(f - g_eps) of the stored representatives; +inf when they agree.
  Valuation error_valuation;
  /// Precision of f - g_eps.
  Rational error_precision;
  /// min(error_valuation, error_precision) > w - 1.
  bool bound_holds = false;
  /// The sharper discrete-case bound min(error_valuation, error_precision) > w.
  bool sharp_bound_holds = false;
};

/// g_eps = sum_i phi_i(f) x_i, the approximation of f by an element of
/// Tr(f) T_n(l). The coefficients of f_eps are read as exact Laurent
/// polynomials (their stored representatives) when forming their span.
/// Throws PrecisionError if the precision of f cannot certify the bound and
/// InternalError if the bound fails.
SplitCertificate frobenius_split_approximant(const RestrictedSeries& f, const Rational& epsilon_valuation,
                                             Execution execution = Execution::Serial);

/// sum_i values[i] x_i, the reassembly used by certificate checks.
RestrictedSeries assemble_approximant(const std::vector<RestrictedSeries>& values, const OrthogonalBasis& basis,
                                      const RestrictedSeries& shape);

}  // namespace frobcalc
