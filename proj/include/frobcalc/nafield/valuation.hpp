#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace frobcalc {

using Rational = boost::rational<std::int64_t>;

/// A value of v: rational or +infinity (the valuation of zero). The norm
/// |x| = rho^v(x) is never formed; norms are compared through valuations.
class Valuation {
 public:
  /// +infinity.
  Valuation() = default;
  Valuation(Rational value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Valuation(std::int64_t value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Requires a finite valuation.
  const Rational& value() const;

  Valuation operator+(const Valuation& other) const;
  Valuation operator-(const Rational& shift) const;

  bool operator==(const Valuation& other) const { return value_ == other.value_; }
  std::strong_ordering operator<=>(const Valuation& other) const;

  /// "+inf", "-2", "1/2".
  std::string to_string() const;

 private:
  std::optional<Rational> value_;
};

std::string rational_to_string(const Rational& r);
/// Parses "3", "-2", "1/2".
Rational parse_rational(const std::string& text);

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace frobcalc
