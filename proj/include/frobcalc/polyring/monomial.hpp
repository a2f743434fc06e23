#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace frobcalc {

/// Hard limit on ring size; one slot is kept free for elimination variables.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector x^a = x_1^{a_1} ... x_n^{a_n}, stored inline.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exponents);
  explicit Monomial(std::span<const std::uint32_t> exponents);

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, std::uint32_t value) { exp_[i] = value; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Componentwise sum; throws CapError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// Componentwise difference; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Every exponent multiplied by k; throws CapError on overflow.
  Monomial scaled(std::uint64_t k) const;

  std::vector<std::uint32_t> exponents() const;

  // Plain lexicographic comparison of the stored vector; used for map keys,
  // not as a monomial order (see MonomialOrder).
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint32_t, kMaxVariables> exp_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Multiplicative total order on monomials with 1 minimal.
///
/// `precedence[0]` is the most significant variable. A nonzero
/// `elimination_block` k makes the order an elimination order for the
/// variables precedence[0..k): monomials are first compared by their degree
/// in that block, ties broken by the base kind.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<std::uint8_t> precedence,
                std::size_t elimination_block = 0);

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<std::uint8_t>& precedence() const { return precedence_; }
  std::size_t elimination_block() const { return elimination_block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  Kind kind_ = Kind::GrevLex;
  std::vector<std::uint8_t> precedence_;
  std::size_t elimination_block_ = 0;
};

}  // namespace frobcalc
