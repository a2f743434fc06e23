#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "frobcalc/polyring/field.hpp"

namespace frobcalc::upoly {

/// Dense univariate polynomial over F_p, constant term first, no trailing
/// zeros. The zero polynomial is empty.
using UPoly = std::vector<Coeff>;

void trim(UPoly& a);
/// -1 for zero.
long degree(const UPoly& a);

UPoly add(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& f, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& f, const UPoly& a, const UPoly& b);
/// a*b mod X^n.
UPoly mul_trunc(const PrimeField& f, const UPoly& a, const UPoly& b, std::size_t n);
UPoly scale(const PrimeField& f, const UPoly& a, Coeff c);

/// (q, r) with a = q b + r and deg r < deg b. Requires b nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& f, const UPoly& a, const UPoly& b);

/// 1/a mod X^n by Newton iteration. Requires a[0] != 0.
UPoly inverse_trunc(const PrimeField& f, const UPoly& a, std::size_t n);

}  // namespace frobcalc::upoly
