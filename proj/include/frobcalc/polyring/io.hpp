#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobcalc/polyring/ideal.hpp"

namespace frobcalc {

/// Parses `GF(p)[x,y,...]`, optionally followed by `:lex` or `:grevlex`.
RingPtr parse_ring(std::string_view text);

/// poly := term (('+'|'-') term)*
/// term := coeff? '*'? monomial?
/// monomial := var ('^' int)? ('*'? var ('^' int)?)*
/// Variables are matched greedily against the ring's names, so `xy` reads as
/// x*y unless a variable named `xy` exists.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Polynomials separated by ';' (',' also accepted). Empty text is (0).
Ideal parse_ideal(const RingPtr& ring, std::string_view text);

/// Comma-separated coordinates, e.g. "1,0,2".
std::vector<Coeff> parse_point(const RingPtr& ring, std::string_view text);

nlohmann::json ring_to_json(const Ring& ring);
nlohmann::json polynomial_to_json(const Polynomial& f);
nlohmann::json ideal_to_json(const Ideal& ideal);
RingPtr ring_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const RingPtr& ring, const nlohmann::json& j);

}  // namespace frobcalc
