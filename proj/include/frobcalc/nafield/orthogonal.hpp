#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "frobcalc/nafield/laurent.hpp"

namespace frobcalc {

/// Finitely many elements of l = F_p((t^(1/d))) spanning a subspace over
/// k = F_p((t)). As a k-space, l = ⊕_{j<d} k t^(j/d).
using NormedVectorSet = std::vector<LaurentElement>;

/// A basis of a k-span whose leading valuations are pairwise distinct mod 1.
/// Over a discretely valued k such a basis is orthogonal: for all a_i in k,
/// v(sum a_i y_i) = min v(a_i y_i).
struct OrthogonalBasis {
  std::uint32_t p = 2;
  std::uint32_t d = 1;
  std::vector<LaurentElement> vectors;
  /// Leading exponent class of each vector: numerator of v(y_i) mod d.
  std::vector<std::uint32_t> classes;
  /// Index of the input vector each basis vector was reduced from.
  std::vector<std::size_t> sources;
  /// The constant t of the t-orthogonality inequality. Always 1 in the
  /// discretely valued case.
  int t_constant = 1;
};

/// Orthogonal basis of the k-span of `vectors` (taken in order), by
/// reduction of leading terms against earlier basis vectors of the same
/// class. Exact inputs are checked for k-linear dependence first with an
/// exact rank computation over F_p[t]. A finite-precision input that
/// reduces to zero within its precision raises PrecisionError naming the
/// pivot it was last reduced against. A basis vector lying in a single
/// component k t^(j/d) is replaced by the monomial t^(v).
OrthogonalBasis orthogonalize(std::span<const LaurentElement> vectors);

/// Whether every vector is nonzero and the classes are pairwise distinct.
bool is_certified(const OrthogonalBasis& basis);

/// The span basis followed by t^(j/d) for each class j not yet used: an
/// orthogonal basis of all of l over k.
struct CoordinateSystem {
  std::uint32_t p = 2;
  std::uint32_t d = 1;
  std::vector<LaurentElement> basis;
  std::vector<std::uint32_t> classes;
  std::size_t span_size = 0;
};

CoordinateSystem complete_basis(const OrthogonalBasis& basis);

/// Coordinates c_i in k with z = sum c_i y_i. Reduction stops when the
/// residual is zero (coordinates then exact) or when its valuation reaches
/// the working precision L: the precision of z, or default_precision() for
/// exact z. A coordinate cut off at L is known to t^ceil(L - v(y_i)).
std::vector<LaurentElement> coordinates(const CoordinateSystem& system, const LaurentElement& z,
                                        std::optional<std::int64_t> working_precision = std::nullopt);

/// The dual functional y_i^*: the i-th coordinate in the completed basis. It
/// satisfies v(y_i^*(z)) >= v(z) - v(y_i).
struct DualFunctional {
  std::size_t index = 0;
  std::shared_ptr<const CoordinateSystem> system;

  LaurentElement operator()(const LaurentElement& z) const;
  const LaurentElement& basis_vector() const { return system->basis[index]; }
};

/// Throws DomainError for an uncertified basis.
std::vector<DualFunctional> dual_functionals(const OrthogonalBasis& basis);

}  // namespace frobcalc
