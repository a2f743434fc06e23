#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frobcalc/nafield/laurent.hpp"
#include "frobcalc/polyring/ideal.hpp"
#include "frobcalc/tate/series.hpp"

/// Seeded generators for property checks, self-tests and benchmarks. The
/// same seed always yields the same objects.
namespace frobcalc::gen {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Up to `max_terms` random terms of total degree <= max_degree; may be zero.
Polynomial polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree, std::size_t max_terms);
/// A nonzero polynomial.
Polynomial nonzero_polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree, std::size_t max_terms);
/// 1..max_gens nonzero generators.
Ideal ideal(Rng& rng, const RingPtr& ring, std::size_t max_gens, std::uint32_t max_degree, std::size_t max_terms);
/// An ideal generated by 1..max_gens monomials of degree 1..max_degree.
Ideal monomial_ideal(Rng& rng, const RingPtr& ring, std::size_t max_gens, std::uint32_t max_degree);
std::vector<Coeff> point(Rng& rng, std::uint32_t p, std::size_t n);

/// Exponents drawn from [lo, hi] in units of 1/d.
LaurentElement laurent(Rng& rng, std::uint32_t p, std::uint32_t d, std::int64_t lo, std::int64_t hi,
                       std::size_t max_terms, std::int64_t precision = LaurentElement::kExact);
LaurentElement nonzero_laurent(Rng& rng, std::uint32_t p, std::uint32_t d, std::int64_t lo, std::int64_t hi,
                               std::size_t max_terms, std::int64_t precision = LaurentElement::kExact);

/// Each monomial of degree <= cap is present with probability 1/2, with a
/// coefficient whose exponents lie in [lo, hi] (units of 1/d).
RestrictedSeries series(Rng& rng, std::uint32_t p, std::uint32_t d, std::size_t nvars, std::uint32_t cap,
                        std::int64_t precision_units, std::int64_t lo, std::int64_t hi, std::size_t max_terms);

/// All monomials in n variables of total degree <= max_degree, by degree.
std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t max_degree);

}  // namespace frobcalc::gen
