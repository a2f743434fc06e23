#include "frobcalc/nafield/laurent.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "frobcalc/errors.hpp"
#include "frobcalc/nafield/upoly.hpp"

namespace frobcalc {

const Rational& Valuation::value() const {
  if (!value_) throw DomainError("valuation is +inf");
  return *value_;
}

Valuation Valuation::operator+(const Valuation& other) const {
  if (is_infinite() || other.is_infinite()) return infinity();
  return Valuation(*value_ + *other.value_);
}

Valuation Valuation::operator-(const Rational& shift) const {
  if (is_infinite()) return infinity();
  return Valuation(*value_ - shift);
}

std::strong_ordering Valuation::operator<=>(const Valuation& other) const {
  if (is_infinite() || other.is_infinite()) {
    if (is_infinite() && other.is_infinite()) return std::strong_ordering::equal;
    return is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (*value_ == *other.value_) return std::strong_ordering::equal;
  return *value_ < *other.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Valuation::to_string() const { return is_infinite() ? "+inf" : rational_to_string(*value_); }

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError("malformed rational '" + text + "'");
    }
    return v;
  };
  std::string_view s = text;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  std::int64_t den = parse_int(s.substr(slash + 1));
  if (den <= 0) throw ParseError("rational '" + text + "' needs a positive denominator");
  return Rational(parse_int(s.substr(0, slash)), den);
}

std::int64_t default_precision() {
  const char* env = std::getenv("FROBCALC_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  std::string_view s(env);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1 || v > 100000) {
    throw ParseError("FROBCALC_PRECISION must be an integer in [1, 100000], got '" + std::string(s) + "'");
  }
  return v;
}

std::uint32_t common_ramification(std::uint32_t a, std::uint32_t b) {
  std::uint64_t l = std::lcm(std::uint64_t{a}, std::uint64_t{b});
  if (l > (1u << 20)) throw CapError("ramification lcm(" + std::to_string(a) + ", " + std::to_string(b) + ") too large");
  return static_cast<std::uint32_t>(l);
}

namespace {

using Units = std::int64_t;
constexpr Units kExact = LaurentElement::kExact;

Units sat_add(Units a, Units b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}

}  // namespace

LaurentElement::LaurentElement(std::uint32_t p, std::uint32_t d, std::int64_t precision)
    : p_(p), d_(d), field_(p), precision_(precision) {
  if (d == 0) throw DomainError("ramification d must be positive");
}

LaurentElement LaurentElement::constant(std::uint32_t p, std::int64_t c, std::uint32_t d, std::int64_t precision) {
  return monomial(p, d, 0, c, precision);
}

LaurentElement LaurentElement::monomial(std::uint32_t p, std::uint32_t d, std::int64_t exponent, std::int64_t c,
                                        std::int64_t precision) {
  return from_terms(p, d, {{exponent, c}}, precision);
}

LaurentElement LaurentElement::from_terms(std::uint32_t p, std::uint32_t d,
                                          const std::map<std::int64_t, std::int64_t>& terms,
                                          std::int64_t precision) {
  LaurentElement x(p, d, precision);
  for (const auto& [e, c] : terms) {
    Coeff r = x.field_.reduce(c);
    if (r != 0 && e < precision) x.terms_.emplace(e, r);
  }
  return x;
}

Valuation LaurentElement::precision() const {
  if (is_exact()) return Valuation::infinity();
  return Valuation(Rational(precision_, d_));
}

Valuation LaurentElement::valuation() const {
  if (terms_.empty()) return Valuation::infinity();
  return Valuation(Rational(terms_.begin()->first, d_));
}

Coeff LaurentElement::coefficient_units(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentElement LaurentElement::refined(std::uint32_t d2) const {
  if (d2 == d_) return *this;
  if (d2 % d_ != 0) {
    throw DomainError("cannot refine ramification " + std::to_string(d_) + " to " + std::to_string(d2));
  }
  const std::int64_t k = d2 / d_;
  LaurentElement x(p_, d2, precision_ == kExact ? kExact : precision_ * k);
  for (const auto& [e, c] : terms_) x.terms_.emplace(e * k, c);
  return x;
}

LaurentElement LaurentElement::truncated(std::int64_t precision_units) const {
  if (precision_units >= precision_) return *this;
  LaurentElement x(p_, d_, precision_units);
  for (const auto& [e, c] : terms_) {
    if (e >= precision_units) break;
    x.terms_.emplace(e, c);
  }
  return x;
}

LaurentElement LaurentElement::exact_representative() const {
  LaurentElement x = *this;
  x.precision_ = kExact;
  return x;
}

void LaurentElement::require_compatible(const LaurentElement& other, const char* op) const {
  if (p_ != other.p_) {
    throw DomainError(std::string(op) + ": characteristics " + std::to_string(p_) + " and " +
                      std::to_string(other.p_) + " differ");
  }
}

LaurentElement LaurentElement::operator+(const LaurentElement& other) const {
  require_compatible(other, "add");
  const std::uint32_t d = common_ramification(d_, other.d_);
  if (d != d_ || d != other.d_) return refined(d) + other.refined(d);
  LaurentElement x(p_, d, std::min(precision_, other.precision_));
  for (const auto& [e, c] : terms_) {
    if (e >= x.precision_) break;
    x.terms_.emplace(e, c);
  }
  for (const auto& [e, c] : other.terms_) {
    if (e >= x.precision_) break;
    auto [it, inserted] = x.terms_.emplace(e, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) x.terms_.erase(it);
    }
  }
  return x;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement x = *this;
  for (auto& [e, c] : x.terms_) c = field_.neg(c);
  return x;
}

LaurentElement LaurentElement::operator-(const LaurentElement& other) const { return *this + (-other); }

LaurentElement LaurentElement::operator*(const LaurentElement& other) const {
  require_compatible(other, "multiply");
  const std::uint32_t d = common_ramification(d_, other.d_);
  if (d != d_ || d != other.d_) return refined(d) * other.refined(d);
  if ((is_exact() && is_zero()) || (other.is_exact() && other.is_zero())) return LaurentElement(p_, d);
  // x = X + O(t^Nx) with v(X) >= low(x); the product is known to
  // min(Nx + low(y), Ny + low(x)).
  const Units low_a = is_zero() ? precision_ : valuation_units();
  const Units low_b = other.is_zero() ? other.precision_ : other.valuation_units();
  LaurentElement x(p_, d, std::min(sat_add(precision_, low_b), sat_add(other.precision_, low_a)));
  std::map<std::int64_t, std::uint64_t> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      if (ea + eb >= x.precision_) break;
      acc[ea + eb] += static_cast<std::uint64_t>(ca) * cb % p_;
    }
  }
  for (const auto& [e, c] : acc) {
    Coeff r = static_cast<Coeff>(c % p_);
    if (r != 0) x.terms_.emplace(e, r);
  }
  return x;
}

LaurentElement LaurentElement::scaled(Coeff c) const {
  c %= p_;
  LaurentElement x(p_, d_, precision_);
  if (c == 0) return x;
  for (const auto& [e, a] : terms_) x.terms_.emplace(e, field_.mul(a, c));
  return x;
}

LaurentElement LaurentElement::shifted(std::int64_t units) const {
  LaurentElement x(p_, d_, sat_add(precision_, units));
  for (const auto& [e, c] : terms_) x.terms_.emplace(e + units, c);
  return x;
}

LaurentElement LaurentElement::inverse(std::optional<std::int64_t> target) const {
  if (is_zero()) {
    if (is_exact()) throw DomainError("inverse of zero");
    throw PrecisionError("inverse of an element that is zero to precision " + precision().to_string());
  }
  const Units v = valuation_units();
  const Coeff inv_lead = field_.inv(leading_coeff());
  if (is_exact() && terms_.size() == 1) return monomial(p_, d_, -v, inv_lead);

  Units absolute = 0;
  if (is_exact()) {
    const std::int64_t t = target.value_or(default_precision());
    absolute = t * static_cast<Units>(d_);
  } else {
    absolute = precision_ - 2 * v;
  }
  const Units relative = absolute + v;
  if (relative <= 0) {
    throw PrecisionError("inverse: target precision " + rational_to_string(Rational(absolute, d_)) +
                         " leaves no correct digit of a result with valuation " +
                         rational_to_string(Rational(-v, d_)));
  }
  const auto n = static_cast<std::size_t>(relative);
  upoly::UPoly unit(n, 0);
  for (const auto& [e, c] : terms_) {
    if (e - v >= relative) break;
    unit[static_cast<std::size_t>(e - v)] = c;
  }
  upoly::trim(unit);
  upoly::UPoly y = upoly::inverse_trunc(field_, unit, n);
  LaurentElement x(p_, d_, absolute);
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] != 0) x.terms_.emplace(static_cast<Units>(k) - v, y[k]);
  }
  return x;
}

LaurentElement LaurentElement::component(std::uint32_t j) const {
  if (j >= d_) throw DomainError("component index " + std::to_string(j) + " out of range for d = " + std::to_string(d_));
  const Units prec = is_exact() ? kExact : ceil_div(precision_ - j, d_);
  LaurentElement x(p_, 1, prec);
  for (const auto& [e, c] : terms_) {
    const Units shifted_e = e - j;
    if (shifted_e - floor_div(shifted_e, d_) * d_ == 0) x.terms_.emplace(floor_div(shifted_e, d_), c);
  }
  return x;
}

bool LaurentElement::in_base_field() const {
  for (const auto& [e, c] : terms_) {
    if (e - floor_div(e, d_) * d_ != 0) return false;
  }
  return true;
}

namespace {

std::string t_power(const Rational& r) {
  if (r == Rational(0)) return "1";
  if (r == Rational(1)) return "t";
  if (r.denominator() == 1 && r > 0) return "t^" + std::to_string(r.numerator());
  return "t^(" + rational_to_string(r) + ")";
}

}  // namespace

std::string LaurentElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const Rational r(e, d_);
    if (r == Rational(0)) {
      os << c;
    } else if (c == 1) {
      os << t_power(r);
    } else {
      os << c << "*" << t_power(r);
    }
  }
  if (!is_exact()) {
    if (!first) os << " + ";
    first = false;
    os << "O(" << t_power(Rational(precision_, d_)) << ")";
  }
  if (first) return "0";
  return os.str();
}

bool LaurentElement::operator==(const LaurentElement& other) const {
  if (p_ != other.p_) return false;
  if (d_ != other.d_) {
    const std::uint32_t d = common_ramification(d_, other.d_);
    return refined(d) == other.refined(d);
  }
  return precision_ == other.precision_ && terms_ == other.terms_;
}

Valuation norm_valuation(const LaurentElement& a) { return a.valuation(); }

ScaledElement uniform_scale(const LaurentElement& x) {
  if (x.is_zero()) throw DomainError("uniform scaling needs a nonzero element");
  const std::int64_t d = x.ramification();
  // e = floor(-v(x)) puts v(t^e x) = e + v(x) in (-1, 0].
  const std::int64_t e = floor_div(-x.valuation_units(), d);
  LaurentElement c = LaurentElement::monomial(x.characteristic(), 1, e);
  return ScaledElement{c, x.shifted(e * d)};
}

}  // namespace frobcalc
