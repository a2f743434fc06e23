#include "frobcalc/fsing/fsing.hpp"

#include <algorithm>

#include "frobcalc/polyring/groebner.hpp"

namespace frobcalc {

Ideal fedder_colon(const QuotientPresentation& pres, BracketExponent e) {
  const Ideal& i = pres.defining_ideal;
  std::vector<Polynomial> nonzero;
  for (const auto& g : i.generators()) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  // S is a domain: (f^q : f) = (f^(q-1)).
  if (nonzero.size() == 1) {
    const std::uint64_t q = e.q(i.ring()->characteristic());
    return Ideal(i.ring(), {nonzero.front().pow(q - 1)});
  }
  return colon(bracket_power(i, e), i).ideal;
}

bool fedder_pure_at(const QuotientPresentation& pres, const Polynomial& r_lift, const Ideal& m,
                    BracketExponent e) {
  const Ideal& i = pres.defining_ideal;
  require_same_ring(i.ring(), m.ring(), "fedder");
  require_same_ring(i.ring(), r_lift.ring(), "fedder");
  auto point = rational_point_of(m);
  if (!point) throw DomainError("fedder: " + m.to_string() + " is not a rational maximal ideal");
  if (!m.contains(i)) throw DomainError("fedder: point not on V(I)");
  Ideal m_power = bracket_power(m, e);
  const Ideal colon_ideal = fedder_colon(pres, e);
  for (const auto& c : colon_ideal.groebner_basis()) {
    if (!m_power.contains(c * r_lift)) return true;
  }
  return false;
}

bool fedder_pure_at(const QuotientPresentation& pres, const Polynomial& r_lift, std::span<const Coeff> point,
                    BracketExponent e) {
  return fedder_pure_at(pres, r_lift, point_ideal(pres.defining_ideal.ring(), point), e);
}

Ideal locus_ideal(const QuotientPresentation& pres, const Polynomial& r_lift, BracketExponent e) {
  require_same_ring(pres.defining_ideal.ring(), r_lift.ring(), "pure locus");
  return frobenius_root(fedder_colon(pres, e) * r_lift, e);
}

std::vector<std::vector<Coeff>> rational_points(const Ideal& ideal, Execution execution,
                                                std::uint64_t max_points) {
  const RingPtr& ring = ideal.ring();
  const std::uint32_t p = ring->characteristic();
  const std::size_t n = ring->nvars();
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    total *= p;
    if (total > max_points) throw CapError("rational point scan exceeds " + std::to_string(max_points) + " points");
  }
  const auto& gens = ideal.groebner_basis();
  auto hits = kernels::map(execution, total, [&](std::size_t idx) {
    std::vector<Coeff> pt(n);
    std::uint64_t rest = idx;
    for (std::size_t v = n; v-- > 0;) {
      pt[v] = static_cast<Coeff>(rest % p);
      rest /= p;
    }
    bool on = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.evaluate(pt) == 0; });
    return on ? std::optional<std::vector<Coeff>>(std::move(pt)) : std::nullopt;
  });
  std::vector<std::vector<Coeff>> out;
  for (auto& h : hits) {
    if (h) out.push_back(std::move(*h));
  }
  return out;
}

std::vector<PointVerdict> scan_locus(const Ideal& locus, const Ideal& defining_ideal, Execution execution,
                                     std::uint64_t max_points) {
  auto points = rational_points(defining_ideal, execution, max_points);
  const auto& gens = locus.groebner_basis();
  return kernels::map(execution, points.size(), [&](std::size_t k) {
    // m_a contains the locus ideal iff every generator vanishes at a.
    bool pure = std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.evaluate(points[k]) != 0; });
    return PointVerdict{points[k], pure};
  });
}

LocusReport pure_locus(const QuotientPresentation& pres, const Polynomial& r_lift, BracketExponent e,
                       const LocusOptions& options) {
  Ideal locus = locus_ideal(pres, r_lift, e);
  LocusReport report{locus, (locus + pres.defining_ideal).is_unit(), std::nullopt};
  if (options.scan_points) {
    report.rational_points = scan_locus(locus, pres.defining_ideal, options.execution, options.max_points);
  }
  return report;
}

LocusReport fpure_locus(const QuotientPresentation& pres, const LocusOptions& options) {
  return pure_locus(pres, Polynomial::constant(pres.defining_ideal.ring(), 1), BracketExponent(1), options);
}

namespace {

struct EntrySource {
  Polynomial colon_element;
  Monomial basis_monomial;
  Polynomial entry;
};

bool certificate_holds(const SplittingCertificate& cert, const Ideal& i, const Polynomial& r_lift,
                       BracketExponent e) {
  Polynomial value = cert.functional(cert.multiplier * r_lift, e);
  return value == cert.value && i.contains(value - Polynomial::constant(i.ring(), 1));
}

}  // namespace

SplitResult split_element_test(const QuotientPresentation& pres, const Polynomial& r_lift, BracketExponent e) {
  const Ideal& i = pres.defining_ideal;
  const RingPtr& ring = i.ring();
  require_same_ring(ring, r_lift.ring(), "split test");
  const Ideal colon_ideal = fedder_colon(pres, e);
  Ideal locus = frobenius_root(colon_ideal * r_lift, e);
  SplitResult result{false, locus, std::nullopt};
  if (!(locus + i).is_unit()) return result;
  result.splits = true;

  const auto& field = ring->field();
  std::vector<EntrySource> sources;
  for (const auto& c : colon_ideal.groebner_basis()) {
    auto dec = frobenius_decompose(c * r_lift, e);
    for (const auto& [b, w] : dec.table()) sources.push_back(EntrySource{c, b, w});
  }

  // A single table entry that is a nonzero constant modulo I.
  for (const auto& s : sources) {
    Polynomial nf = i.normal_form(s.entry);
    if (!nf.is_unit()) continue;
    Coeff inv = field.inv(nf.leading_coeff());
    SplittingCertificate cert{s.colon_element.scaled(inv), ProjectionFunctional{s.basis_monomial},
                              s.entry.scaled(inv)};
    if (!certificate_holds(cert, i, r_lift, e)) throw InternalError("split test: certificate check failed");
    result.certificate = std::move(cert);
    return result;
  }

  // General case: 1 = sum h_k w_k + (element of I), with w_k = π_{b_k}(F_*(c_k r)).
  // Since h π_b(F_* u) = π_Q(F_*(h^q x^(Q-b) u)) for Q = (q-1, ..., q-1),
  // c = sum h_k^q x^(Q-b_k) c_k is a single multiplier for the projection π_Q.
  std::vector<Polynomial> gens;
  for (const auto& s : sources) gens.push_back(s.entry);
  gens.insert(gens.end(), i.generators().begin(), i.generators().end());
  std::vector<Polynomial> h;
  try {
    h = unit_cofactors(gens);
  } catch (const DomainError&) {
    throw InternalError("split test: locus + I is the unit ideal but no representation of 1 was found");
  }
  const std::uint64_t q = e.q(ring->characteristic());
  Monomial top(ring->nvars());
  for (std::size_t v = 0; v < ring->nvars(); ++v) top.set(v, static_cast<std::uint32_t>(q - 1));
  Polynomial c(ring);
  for (std::size_t k = 0; k < sources.size(); ++k) {
    if (h[k].is_zero()) continue;
    c = c + h[k].frobenius_power(q) * Polynomial::monomial(ring, top / sources[k].basis_monomial) *
                sources[k].colon_element;
  }
  ProjectionFunctional phi{top};
  SplittingCertificate cert{c, phi, phi(c * r_lift, e)};
  if (!certificate_holds(cert, i, r_lift, e)) {
    throw InternalError("split test: assembled certificate does not evaluate to 1 modulo I");
  }
  result.certificate = std::move(cert);
  return result;
}

namespace {

Ideal filtration_ideal(const RingPtr& ring, const std::vector<std::vector<std::uint32_t>>& alphas, std::size_t from,
                       std::uint32_t c, std::uint32_t b) {
  std::vector<Polynomial> gens;
  for (std::uint32_t v = 0; v < c; ++v) {
    Monomial m(ring->nvars());
    m.set(v, b);
    gens.push_back(Polynomial::monomial(ring, m));
  }
  for (std::size_t k = from; k < alphas.size(); ++k) {
    Monomial m(ring->nvars());
    for (std::uint32_t v = 0; v < c; ++v) m.set(v, alphas[k][v]);
    gens.push_back(Polynomial::monomial(ring, m));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

FiltrationReport filtration_verify(std::uint32_t c, std::uint32_t b, const RingPtr& ring, Execution execution) {
  if (c < 1 || c > ring->nvars()) {
    throw DomainError("filtration: c = " + std::to_string(c) + " must be between 1 and the variable count " +
                      std::to_string(ring->nvars()));
  }
  if (b < 1) throw DomainError("filtration: b must be at least 1");
  std::uint64_t count = 1;
  for (std::uint32_t v = 0; v < c; ++v) {
    count *= b;
    if (count > 100000) throw CapError("filtration: b^c exceeds 100000 steps");
  }
  // Lex order with x_1 most significant; index 0 is (0, ..., 0).
  std::vector<std::vector<std::uint32_t>> alphas(count, std::vector<std::uint32_t>(c));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t v = c; v-- > 0;) {
      alphas[idx][v] = static_cast<std::uint32_t>(rest % b);
      rest /= b;
    }
  }
  std::vector<Polynomial> maximal_gens;
  for (std::uint32_t v = 0; v < c; ++v) maximal_gens.push_back(Polynomial::variable(ring, v));
  const Ideal maximal(ring, maximal_gens);

  FiltrationReport report;
  report.c = c;
  report.b = b;
  report.steps = kernels::map(execution, alphas.size(), [&](std::size_t k) {
    Ideal current = filtration_ideal(ring, alphas, k, c, b);
    Ideal next = filtration_ideal(ring, alphas, k + 1, c, b);
    Monomial xa(ring->nvars());
    for (std::uint32_t v = 0; v < c; ++v) xa.set(v, alphas[k][v]);
    Polynomial x_alpha = Polynomial::monomial(ring, xa);
    Ideal col = colon(next, x_alpha).groebner();
    bool colon_ok = col == maximal;
    bool generation_ok = current == next + Ideal(ring, {x_alpha});
    return FiltrationStep{alphas[k], col, colon_ok, generation_ok};
  });
  report.all_pass = std::all_of(report.steps.begin(), report.steps.end(),
                                [](const FiltrationStep& s) { return s.colon_ok && s.generation_ok; });
  if (ring->nvars() == c) {
    report.quotient_dimension = quotient_dimension(filtration_ideal(ring, alphas, alphas.size(), c, b));
    report.dimension_ok = report.quotient_dimension == count;
    report.all_pass = report.all_pass && report.dimension_ok;
  }
  return report;
}

std::uint32_t uniform_exponent(const Polynomial& f, std::uint32_t cap) {
  if (f.is_zero()) throw DomainError("uniform exponent: f must be nonzero");
  if (f.is_unit()) throw DomainError("uniform exponent: f must not be a unit");
  const Ideal principal(f.ring(), {f});
  std::vector<Ideal> partial;
  for (std::uint32_t e = 1; e <= cap; ++e) {
    Ideal root = frobenius_root(principal, BracketExponent(e));
    if (root.is_unit()) return e;
    partial.push_back(root);
  }
  throw UniformExponentCapError("uniform exponent: no e <= " + std::to_string(cap) + " found", std::move(partial));
}

}  // namespace frobcalc
