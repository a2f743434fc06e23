#include "frobcalc/random.hpp"

#include <algorithm>
#include <functional>

namespace frobcalc::gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      m.set(i, k);
      rec(i + 1, left - k);
    }
    m.set(i, 0);
  };
  rec(0, max_degree);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  return out;
}

Polynomial polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree, std::size_t max_terms) {
  const auto monos = monomials_up_to(ring->nvars(), max_degree);
  const auto count = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_terms)));
  std::vector<Term> terms;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& m = monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(monos.size()) - 1))];
    terms.push_back(Term{m, static_cast<Coeff>(uniform(rng, 1, ring->characteristic() - 1))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial nonzero_polynomial(Rng& rng, const RingPtr& ring, std::uint32_t max_degree, std::size_t max_terms) {
  for (;;) {
    Polynomial f = polynomial(rng, ring, max_degree, std::max<std::size_t>(max_terms, 1));
    if (!f.is_zero()) return f;
  }
}

Ideal ideal(Rng& rng, const RingPtr& ring, std::size_t max_gens, std::uint32_t max_degree, std::size_t max_terms) {
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_gens)));
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(nonzero_polynomial(rng, ring, max_degree, max_terms));
  return Ideal(ring, std::move(gens));
}

Ideal monomial_ideal(Rng& rng, const RingPtr& ring, std::size_t max_gens, std::uint32_t max_degree) {
  auto monos = monomials_up_to(ring->nvars(), max_degree);
  monos.erase(monos.begin());
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_gens)));
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& m = monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(monos.size()) - 1))];
    gens.push_back(Polynomial::monomial(ring, m));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<Coeff> point(Rng& rng, std::uint32_t p, std::size_t n) {
  std::vector<Coeff> pt(n);
  for (auto& c : pt) c = static_cast<Coeff>(uniform(rng, 0, p - 1));
  return pt;
}

LaurentElement laurent(Rng& rng, std::uint32_t p, std::uint32_t d, std::int64_t lo, std::int64_t hi,
                       std::size_t max_terms, std::int64_t precision) {
  std::map<std::int64_t, std::int64_t> terms;
  const auto count = uniform(rng, 0, static_cast<std::int64_t>(max_terms));
  for (std::int64_t k = 0; k < count; ++k) terms[uniform(rng, lo, hi)] += uniform(rng, 1, p - 1);
  return LaurentElement::from_terms(p, d, terms, precision);
}

LaurentElement nonzero_laurent(Rng& rng, std::uint32_t p, std::uint32_t d, std::int64_t lo, std::int64_t hi,
                               std::size_t max_terms, std::int64_t precision) {
  for (;;) {
    LaurentElement x = laurent(rng, p, d, lo, hi, std::max<std::size_t>(max_terms, 1), precision);
    if (!x.is_zero()) return x;
  }
}

RestrictedSeries series(Rng& rng, std::uint32_t p, std::uint32_t d, std::size_t nvars, std::uint32_t cap,
                        std::int64_t precision_units, std::int64_t lo, std::int64_t hi, std::size_t max_terms) {
  std::map<Monomial, LaurentElement> terms;
  for (const auto& m : monomials_up_to(nvars, cap)) {
    if (uniform(rng, 0, 1) == 0) continue;
    terms.emplace(m, laurent(rng, p, d, lo, hi, max_terms));
  }
  return RestrictedSeries::from_terms(p, d, nvars, cap, precision_units, terms);
}

}  // namespace frobcalc::gen
