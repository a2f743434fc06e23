#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "frobcalc/polyring/polynomial.hpp"

namespace frobcalc {

/// Ideal of F_p[x_1..x_n] given by generators, with a lazily computed reduced
/// Gröbner basis under the ring's order. Copies share the cache; the fill is
/// guarded by std::call_once, so concurrent readers see one basis.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  /// Adopts `basis` as the cached reduced basis without recomputing it.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& groebner_basis() const;
  /// The same ideal presented by its reduced Gröbner basis.
  Ideal groebner() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;

  /// Ideal equality, i.e. equality of reduced bases.
  bool operator==(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
/// a * (f).
Ideal operator*(const Ideal& a, const Polynomial& f);

bool member(const Polynomial& f, const Ideal& ideal);

struct ColonResult {
  Ideal ideal;
  /// Set when the divisor ideal was zero and (I : 0) = S was returned.
  bool divisor_was_zero = false;
};

/// (I : J) = {f : f J ⊆ I}, intersecting (I : g) over generators g of J.
ColonResult colon(const Ideal& i, const Ideal& j);
/// (I : (g)); the unit ideal when g = 0.
Ideal colon(const Ideal& i, const Polynomial& g);

/// I ∩ J by eliminating an auxiliary variable from t I + (1 - t) J.
Ideal intersect(const Ideal& i, const Ideal& j);
/// Intersection of a list; the empty list gives the unit ideal of `ring`.
Ideal intersect(std::span<const Ideal> ideals, const RingPtr& ring);

/// dim_k S/I when I is zero-dimensional (counted as standard monomials),
/// otherwise nullopt. Throws CapError beyond `max_monomials`.
std::optional<std::uint64_t> quotient_dimension(const Ideal& ideal,
                                                std::uint64_t max_monomials = 10'000'000);

/// The maximal ideal (x_1 - a_1, ..., x_n - a_n) of a rational point.
Ideal point_ideal(const RingPtr& ring, std::span<const Coeff> point);

/// The point a if `m` is a rational maximal ideal (x_i - a_i), else nullopt.
std::optional<std::vector<Coeff>> rational_point_of(const Ideal& m);

}  // namespace frobcalc
