#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "frobcalc/nafield/valuation.hpp"
#include "frobcalc/polyring/field.hpp"

namespace frobcalc {

/// Default absolute precision in whole powers of t; FROBCALC_PRECISION
/// overrides it.
inline constexpr std::int64_t kDefaultPrecision = 64;
std::int64_t default_precision();

/// An element of F_p((t^(1/d))) known modulo t^N.
///
/// Exponents and the precision N are stored as integers in units of 1/d.
/// Stored coefficients are nonzero and every stored exponent is below N.
/// N = kExact marks an exact element (a finite Laurent polynomial).
class LaurentElement {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

  /// Zero, exact unless a precision is given.
  explicit LaurentElement(std::uint32_t p, std::uint32_t d = 1, std::int64_t precision = kExact);

  static LaurentElement constant(std::uint32_t p, std::int64_t c, std::uint32_t d = 1,
                                 std::int64_t precision = kExact);
  /// c t^(exponent/d).
  static LaurentElement monomial(std::uint32_t p, std::uint32_t d, std::int64_t exponent, std::int64_t c = 1,
                                 std::int64_t precision = kExact);
  /// Reduces coefficients mod p, drops zeros and terms at or above precision.
  static LaurentElement from_terms(std::uint32_t p, std::uint32_t d, const std::map<std::int64_t, std::int64_t>& terms,
                                   std::int64_t precision = kExact);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t ramification() const { return d_; }
  const PrimeField& field() const { return field_; }
  const std::map<std::int64_t, Coeff>& terms() const { return terms_; }

  bool is_exact() const { return precision_ == kExact; }
  /// In units of 1/d; kExact when exact.
  std::int64_t precision_units() const { return precision_; }
  /// N as a valuation; +infinity when exact.
  Valuation precision() const;

  /// No stored terms: exactly zero, or zero to the known precision.
  bool is_zero() const { return terms_.empty(); }
  Valuation valuation() const;
  /// v(x) in units of 1/d. Requires a nonzero element.
  std::int64_t valuation_units() const { return terms_.begin()->first; }
  Coeff leading_coeff() const { return terms_.begin()->second; }
  Coeff coefficient_units(std::int64_t exponent) const;

  /// The same element over F_p((t^(1/d2))); d2 must be a multiple of d.
  LaurentElement refined(std::uint32_t d2) const;
  /// Lowers the precision to min(N, precision_units).
  LaurentElement truncated(std::int64_t precision_units) const;
  /// The stored Laurent polynomial as an exact element.
  LaurentElement exact_representative() const;

  LaurentElement operator+(const LaurentElement& other) const;
  LaurentElement operator-(const LaurentElement& other) const;
  LaurentElement operator-() const;
  LaurentElement operator*(const LaurentElement& other) const;
  LaurentElement scaled(Coeff c) const;
  /// t^(units/d) * this.
  LaurentElement shifted(std::int64_t units) const;

  /// 1/x by Newton iteration on the unit part. Exact monomials invert
  /// exactly. Other exact elements are inverted to absolute precision
  /// `target` (whole powers of t, default_precision() if absent); a
  /// finite-precision x known mod t^N gives 1/x mod t^(N - 2 v(x)).
  /// Throws DomainError for zero and PrecisionError when no correct digit
  /// remains.
  LaurentElement inverse(std::optional<std::int64_t> target = std::nullopt) const;

  /// x_j in x = sum_j x_j t^(j/d), as an element of F_p((t)).
  LaurentElement component(std::uint32_t j) const;
  /// All exponents integral, i.e. x lies in F_p((t)).
  bool in_base_field() const;

  /// `t^(-2) + 3*t^(1/2) + O(t^5)`.
  std::string to_string() const;

  /// Equal values and equal precision, after a common refinement.
  bool operator==(const LaurentElement& other) const;

 private:
  void require_compatible(const LaurentElement& other, const char* op) const;

  std::uint32_t p_;
  std::uint32_t d_;
  PrimeField field_;
  std::int64_t precision_;
  std::map<std::int64_t, Coeff> terms_;
};

/// v(a).
Valuation norm_valuation(const LaurentElement& a);

struct ScaledElement {
  /// t^e with e an integer.
  LaurentElement scale;
  /// scale * x, with valuation in (-1, 0].
  LaurentElement scaled;
};

/// The unique integral power c = t^e with v(c x) in (-1, 0]. Throws
/// DomainError for zero.
ScaledElement uniform_scale(const LaurentElement& x);

/// lcm(a, b), checked against overflow.
std::uint32_t common_ramification(std::uint32_t a, std::uint32_t b);

}  // namespace frobcalc
