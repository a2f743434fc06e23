#pragma once

#include <span>
#include <vector>

#include "frobcalc/polyring/polynomial.hpp"

namespace frobcalc {

/// Normal form of f modulo `basis` (fully reduced remainder). The basis
/// need not be a Gröbner basis; the result is then merely a remainder.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis of the ideal generated by `generators`, all in the
/// same ring, under that ring's monomial order. Elements are monic and sorted
/// by decreasing leading monomial. Zero generators are ignored; the zero
/// ideal yields an empty basis and the unit ideal yields {1}.
///
/// Buchberger's algorithm with the normal selection strategy; useless pairs
/// are discarded by the Gebauer-Möller update, which implements both the
/// coprime-leading-monomial criterion and the chain criterion.
std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> generators);

/// Turns any Gröbner basis into the reduced one.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

/// Representation of 1 in terms of `generators`: cofactors h_i with
/// sum h_i g_i = 1. Throws DomainError if 1 is not in the ideal.
std::vector<Polynomial> unit_cofactors(std::span<const Polynomial> generators);

}  // namespace frobcalc
