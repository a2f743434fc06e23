#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "frobcalc/polyring/ideal.hpp"

namespace frobcalc {

/// The exponent e of a bracket power I^[q], q = p^e. Always e >= 1.
class BracketExponent {
 public:
  explicit BracketExponent(std::uint32_t e);

  std::uint32_t e() const { return e_; }
  /// p^e; throws CapError if it does not fit in 32 bits.
  std::uint64_t q(std::uint32_t p) const;

 private:
  std::uint32_t e_;
};

/// f = sum_a table[a]^q x^a with a ranging over {0..q-1}^n: the coordinates
/// of F^e_* f in the monomial basis of F^e_* S over S.
class FrobeniusDecomposition {
 public:
  FrobeniusDecomposition(RingPtr ring, std::uint64_t q, std::map<Monomial, Polynomial> table);

  std::uint64_t q() const { return q_; }
  const RingPtr& ring() const { return ring_; }
  /// Only nonzero entries are stored.
  const std::map<Monomial, Polynomial>& table() const { return table_; }
  /// Entry for basis monomial a (zero if absent).
  Polynomial entry(const Monomial& a) const;
  Polynomial reassemble() const;

 private:
  RingPtr ring_;
  std::uint64_t q_;
  std::map<Monomial, Polynomial> table_;
};

/// I^[q]: generated by the q-th powers of the generators of I.
Ideal bracket_power(const Ideal& ideal, BracketExponent e);

FrobeniusDecomposition frobenius_decompose(const Polynomial& f, BracketExponent e);

/// J^[1/q], the smallest ideal I with J ⊆ I^[q]; generated by the table
/// entries of the reduced Gröbner basis elements of J.
Ideal frobenius_root(const Ideal& ideal, BracketExponent e);

/// Projection of F^e_* S onto the basis monomial x^a, an S-linear map
/// F^e_* S -> S.
struct ProjectionFunctional {
  Monomial basis_monomial;

  Polynomial operator()(const Polynomial& f, BracketExponent e) const;
};

struct FunctionalImage {
  ProjectionFunctional functional;
  /// Generators of the image of F^e_* a under the functional.
  std::vector<Polynomial> generators;
};

struct TraceResult {
  Ideal trace;
  std::uint64_t q = 0;
  /// Present when q^n is within the enumeration cap.
  std::optional<std::vector<FunctionalImage>> functionals;
  /// Ideal generated by all functional images; equals `trace`.
  std::optional<Ideal> sum_of_images;
};

inline constexpr std::uint64_t kTraceEnumerationCap = 4096;

/// Trace ideal of F^e_* a, which over a polynomial ring is the Frobenius
/// root. With `enumerate`, also evaluates every projection functional on
/// F^e_* a (capped at q^n <= kTraceEnumerationCap basis projections).
TraceResult trace_ideal(const Ideal& ideal, BracketExponent e, bool enumerate = true);

struct FlatnessReport {
  bool holds = true;
  /// Bracket power of the intersection.
  Ideal power_of_intersection;
  /// Intersection of the bracket powers.
  Ideal intersection_of_powers;
  /// A generator of one side missing from the other, on failure.
  std::optional<Polynomial> witness;
  /// Set when the list was empty and the unit ideal was used.
  bool empty_list = false;
};

/// Checks (∩ I_i)^[q] = ∩ I_i^[q].
FlatnessReport check_intersection_flatness(std::span<const Ideal> ideals, BracketExponent e,
                                           const RingPtr& ring);

}  // namespace frobcalc
