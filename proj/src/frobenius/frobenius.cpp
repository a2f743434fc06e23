#include "frobcalc/frobenius/frobenius.hpp"

#include <algorithm>
#include <set>

#include "frobcalc/errors.hpp"

namespace frobcalc {

BracketExponent::BracketExponent(std::uint32_t e) : e_(e) {
  if (e == 0) throw DomainError("bracket exponent e must be at least 1");
}

std::uint64_t BracketExponent::q(std::uint32_t p) const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw CapError("p^e overflows");
    q *= p;
  }
  return q;
}

FrobeniusDecomposition::FrobeniusDecomposition(RingPtr ring, std::uint64_t q,
                                               std::map<Monomial, Polynomial> table)
    : ring_(std::move(ring)), q_(q), table_(std::move(table)) {}

Polynomial FrobeniusDecomposition::entry(const Monomial& a) const {
  auto it = table_.find(a);
  return it == table_.end() ? Polynomial(ring_) : it->second;
}

Polynomial FrobeniusDecomposition::reassemble() const {
  Polynomial total(ring_);
  for (const auto& [a, g] : table_) total = total + g.frobenius_power(q_) * Polynomial::monomial(ring_, a);
  return total;
}

Ideal bracket_power(const Ideal& ideal, BracketExponent e) {
  const std::uint64_t q = e.q(ideal.ring()->characteristic());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) gens.push_back(g.frobenius_power(q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

FrobeniusDecomposition frobenius_decompose(const Polynomial& f, BracketExponent e) {
  const RingPtr& ring = f.ring();
  const std::uint64_t q = e.q(ring->characteristic());
  const std::size_t n = ring->nvars();
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial a(n), k(n);
    for (std::size_t v = 0; v < n; ++v) {
      a.set(v, static_cast<std::uint32_t>(t.mono[v] % q));
      k.set(v, static_cast<std::uint32_t>(t.mono[v] / q));
    }
    // c^(1/q) = c on the prime field.
    buckets[a].push_back(Term{k, t.coeff});
  }
  std::map<Monomial, Polynomial> table;
  for (auto& [a, terms] : buckets) table.emplace(a, Polynomial::from_terms(ring, std::move(terms)));
  return FrobeniusDecomposition(ring, q, std::move(table));
}

Ideal frobenius_root(const Ideal& ideal, BracketExponent e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.groebner_basis()) {
    const FrobeniusDecomposition dec = frobenius_decompose(g, e);
    for (const auto& [a, entry] : dec.table()) gens.push_back(entry);
  }
  return Ideal(ideal.ring(), std::move(gens)).groebner();
}

Polynomial ProjectionFunctional::operator()(const Polynomial& f, BracketExponent e) const {
  return frobenius_decompose(f, e).entry(basis_monomial);
}

namespace {

// All monomials with exponents in [0, q) in n variables, in lexicographic order.
std::vector<Monomial> basis_monomials(std::size_t n, std::uint64_t q) {
  std::uint64_t count = 1;
  for (std::size_t v = 0; v < n; ++v) count *= q;
  std::vector<Monomial> out;
  out.reserve(count);
  Monomial m(n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t v = n; v-- > 0;) {
      m.set(v, static_cast<std::uint32_t>(rest % q));
      rest /= q;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace

TraceResult trace_ideal(const Ideal& ideal, BracketExponent e, bool enumerate) {
  const RingPtr& ring = ideal.ring();
  TraceResult result{frobenius_root(ideal, e), e.q(ring->characteristic()), std::nullopt, std::nullopt};
  if (!enumerate) return result;

  std::uint64_t count = 1;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    count *= result.q;
    if (count > kTraceEnumerationCap) return result;
  }
  const auto basis = basis_monomials(ring->nvars(), result.q);

  // F^e_* a is generated over S by F^e_*(x^c g), c a basis monomial and g a
  // generator, so each functional's image is generated by its values there.
  std::map<Monomial, std::vector<Polynomial>> images;
  for (const auto& g : ideal.groebner_basis()) {
    for (const auto& c : basis) {
      auto dec = frobenius_decompose(g * Polynomial::monomial(ring, c), e);
      for (const auto& [b, entry] : dec.table()) images[b].push_back(entry.monic());
    }
  }
  std::vector<FunctionalImage> functionals;
  std::vector<Polynomial> all;
  for (const auto& b : basis) {
    FunctionalImage img{ProjectionFunctional{b}, {}};
    if (auto it = images.find(b); it != images.end()) {
      auto& gens = it->second;
      std::sort(gens.begin(), gens.end(), [](const Polynomial& x, const Polynomial& y) {
        return x.to_string() < y.to_string();
      });
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      img.generators = gens;
      all.insert(all.end(), gens.begin(), gens.end());
    }
    functionals.push_back(std::move(img));
  }
  result.functionals = std::move(functionals);
  result.sum_of_images = Ideal(ring, std::move(all)).groebner();
  return result;
}

FlatnessReport check_intersection_flatness(std::span<const Ideal> ideals, BracketExponent e,
                                           const RingPtr& ring) {
  if (ideals.empty()) {
    Ideal one = Ideal::unit(ring);
    return FlatnessReport{true, one, one, std::nullopt, true};
  }
  std::vector<Ideal> powers;
  for (const auto& i : ideals) {
    require_same_ring(ring, i.ring(), "intersection flatness");
    powers.push_back(bracket_power(i, e));
  }
  Ideal lhs = bracket_power(intersect(ideals, ring), e).groebner();
  Ideal rhs = intersect(powers, ring).groebner();
  FlatnessReport report{true, lhs, rhs, std::nullopt, false};
  for (const auto& g : lhs.groebner_basis()) {
    if (!rhs.contains(g)) {
      report.holds = false;
      report.witness = g;
      return report;
    }
  }
  for (const auto& g : rhs.groebner_basis()) {
    if (!lhs.contains(g)) {
      report.holds = false;
      report.witness = g;
      return report;
    }
  }
  return report;
}

}  // namespace frobcalc
