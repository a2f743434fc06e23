#pragma once

#include <cstdint>
#include <string>

namespace frobcalc {

using Coeff = std::uint32_t;

/// Largest accepted characteristic (exclusive).
inline constexpr std::uint32_t kMaxPrime = 1u << 16;

bool is_prime(std::uint32_t n);

/// Arithmetic in Z/p for a word-sized prime p < 2^16.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t k) const;
  /// Throws DomainError for a == 0.
  Coeff inv(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// A value of Z/p paired with its modulus.
struct FieldElement {
  Coeff value = 0;
  std::uint32_t modulus = 2;

  bool operator==(const FieldElement&) const = default;
};

}  // namespace frobcalc
