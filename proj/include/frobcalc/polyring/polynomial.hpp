#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobcalc/polyring/ring.hpp"

namespace frobcalc {

struct Term {
  Monomial mono;
  Coeff coeff = 0;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted by decreasing monomial
/// under the ring's order with no zero coefficients, so equality of
/// polynomials is equality of term vectors.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Combines like terms, reduces coefficients mod p and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  /// Requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const;
  /// Coefficient of m (zero if absent).
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Coeff c) const;
  /// c * m * this.
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// this - c * m * g, the reduction step used by normal forms.
  Polynomial sub_mul_term(const Monomial& m, Coeff c, const Polynomial& g) const;
  Polynomial pow(std::uint64_t k) const;
  /// f^q for q a power of p: coefficients are fixed by Frobenius on F_p,
  /// exponents scale by q.
  Polynomial frobenius_power(std::uint64_t q) const;
  Polynomial monic() const;
  /// All terms but the leading one.
  Polynomial tail() const;

  Coeff evaluate(std::span<const Coeff> point) const;

  /// Re-expresses this polynomial in `target`; variable i goes to var_map[i].
  Polynomial in_ring(const RingPtr& target, std::span<const std::size_t> var_map) const;
  /// Same variables, target order.
  Polynomial in_ring(const RingPtr& target) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms, bool /*already_normal*/);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient f / g; throws InternalError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Value of f at a point of F_p^n.
FieldElement evaluate_at_point(const Polynomial& f, std::span<const FieldElement> point);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace frobcalc
