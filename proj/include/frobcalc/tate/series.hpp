#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "frobcalc/nafield/laurent.hpp"
#include "frobcalc/polyring/monomial.hpp"

namespace frobcalc {

/// An element of T_n(F_p((t^(1/d)))) known modulo monomials of total degree
/// above the cap D and modulo t^N in every coefficient.
///
/// N is stored in units of 1/d. Every stored coefficient carries precision N
/// and is nonzero to that precision.
class RestrictedSeries {
 public:
  /// The zero series.
  RestrictedSeries(std::uint32_t p, std::uint32_t d, std::size_t nvars, std::uint32_t degree_cap,
                   std::int64_t precision_units);

  /// Drops terms above the degree cap and coefficients that vanish to
  /// precision; coefficients are refined to d and truncated to N.
  static RestrictedSeries from_terms(std::uint32_t p, std::uint32_t d, std::size_t nvars, std::uint32_t degree_cap,
                                     std::int64_t precision_units, const std::map<Monomial, LaurentElement>& terms);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t ramification() const { return d_; }
  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree_cap() const { return degree_cap_; }
  std::int64_t precision_units() const { return precision_; }
  /// N as a rational valuation.
  Rational precision() const { return Rational(precision_, d_); }

  const std::map<Monomial, LaurentElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Zero (to precision N) when absent.
  LaurentElement coefficient(const Monomial& m) const;
  /// Largest total degree of a stored term, 0 for zero.
  std::uint32_t max_degree() const;

  RestrictedSeries refined(std::uint32_t d2) const;
  RestrictedSeries with_precision(std::int64_t precision_units) const;
  /// Lowering the cap drops terms; raising it treats the series as exact
  /// in the new degrees.
  RestrictedSeries with_degree_cap(std::uint32_t cap) const;

  RestrictedSeries operator+(const RestrictedSeries& other) const;
  RestrictedSeries operator-(const RestrictedSeries& other) const;
  RestrictedSeries operator-() const;
  /// Multiplies every coefficient by c (c must lie in a field the series
  /// can be refined to). The result precision is N + v(c).
  RestrictedSeries scaled(const LaurentElement& c) const;

  /// `(1 + t^(1/2))*X1^2*X2 + t*X2 + O(deg 7; t^64)`. With one variable the
  /// variable prints as X.
  std::string to_string() const;

  bool operator==(const RestrictedSeries& other) const;

 private:
  void require_compatible(const RestrictedSeries& other, const char* op) const;

  std::uint32_t p_;
  std::uint32_t d_;
  std::size_t nvars_;
  std::uint32_t degree_cap_;
  std::int64_t precision_;
  std::map<Monomial, LaurentElement> terms_;
};

/// ||f|| as a valuation: the minimum coefficient valuation, +inf for zero.
struct GaussNorm {
  Valuation valuation;
};

GaussNorm gauss_valuation(const RestrictedSeries& f);

/// The residue of f at valuation w (units of 1/d): the F_p-coefficients of
/// t^w in each coefficient. For w = gauss valuation this is the leading part.
std::map<Monomial, Coeff> residue_part(const RestrictedSeries& f, std::int64_t w_units);

struct TateProduct {
  RestrictedSeries product;
  /// Whether the product of the leading parts has a monomial inside the
  /// degree cap and below the precision. Then the Gauss valuation of the
  /// product is exactly the sum of the factors' valuations.
  bool leading_part_survives = false;
};

/// The product truncated to degree min(D_f, D_g) and precision
/// min(N_f + v(g), N_g + v(f)). Throws InternalError if the leading parts
/// survive but the valuations fail to add.
TateProduct tate_mul(const RestrictedSeries& f, const RestrictedSeries& g);

}  // namespace frobcalc
