#include "frobcalc/tate/split.hpp"

#include "frobcalc/errors.hpp"

namespace frobcalc {

RestrictedSeries coefficientwise_split(const RestrictedSeries& f) {
  const std::uint32_t d = f.ramification();
  if (d == 1) return f;
  if (d != f.characteristic()) {
    throw DomainError("coefficientwise split needs ramification d = p = " + std::to_string(f.characteristic()) +
                      ", got " + std::to_string(d));
  }
  std::map<Monomial, LaurentElement> out;
  for (const auto& [m, c] : f.terms()) out.emplace(m, c.component(0));
  return RestrictedSeries::from_terms(f.characteristic(), 1, f.nvars(), f.degree_cap(),
                                      ceil_div(f.precision_units(), d), out);
}

RestrictedSeries assemble_approximant(const std::vector<RestrictedSeries>& values, const OrthogonalBasis& basis,
                                      const RestrictedSeries& shape) {
  if (values.size() != basis.vectors.size()) throw DomainError("approximant: one functional value per basis vector");
  RestrictedSeries g(shape.characteristic(), shape.ramification(), shape.nvars(), shape.degree_cap(),
                     shape.precision_units());
  for (std::size_t i = 0; i < values.size(); ++i) g = g + values[i].refined(shape.ramification()).scaled(basis.vectors[i]);
  return g;
}

SplitCertificate frobenius_split_approximant(const RestrictedSeries& f0, const Rational& w, Execution execution) {
  const std::uint32_t p = f0.characteristic();
  if (f0.ramification() != 1 && f0.ramification() != p) {
    throw DomainError("split approximant needs coefficients in F_p((t^(1/p))), got ramification " +
                      std::to_string(f0.ramification()));
  }
  const RestrictedSeries f = f0.refined(p);
  const std::uint32_t d = p;

  std::map<Monomial, LaurentElement> kept;
  std::vector<LaurentElement> span_gens;
  for (const auto& [m, c] : f.terms()) {
    if (c.valuation() <= Valuation(w)) {
      kept.emplace(m, c);
      span_gens.push_back(c.exact_representative());
    }
  }
  RestrictedSeries truncation =
      RestrictedSeries::from_terms(p, d, f.nvars(), f.degree_cap(), f.precision_units(), kept);

  OrthogonalBasis basis = orthogonalize(span_gens);
  basis.p = p;
  basis.d = d;
  for (auto& y : basis.vectors) y = uniform_scale(y.refined(d)).scaled;
  const CoordinateSystem system = complete_basis(basis);

  std::vector<std::pair<Monomial, LaurentElement>> coeffs(f.terms().begin(), f.terms().end());
  auto coords = kernels::map(execution, coeffs.size(),
                             [&](std::size_t k) { return coordinates(system, coeffs[k].second); });

  std::vector<RestrictedSeries> values;
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    std::map<Monomial, LaurentElement> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) terms.emplace(coeffs[k].first, coords[k][i]);
    const std::int64_t prec = ceil_div(f.precision_units() - basis.vectors[i].valuation_units(), d);
    values.push_back(RestrictedSeries::from_terms(p, 1, f.nvars(), f.degree_cap(), prec, terms));
  }
  RestrictedSeries g = assemble_approximant(values, basis, f);
  RestrictedSeries error = f - g;

  const Valuation error_valuation = gauss_valuation(error).valuation;
  const Rational error_precision = error.precision();
  const Valuation effective = std::min(error_valuation, Valuation(error_precision));
  SplitCertificate cert{w,
                        std::move(truncation),
                        std::move(basis),
                        std::move(values),
                        std::move(g),
                        error_valuation,
                        error_precision,
                        effective > Valuation(w - 1),
                        effective > Valuation(w)};
  if (!cert.bound_holds) {
    if (error_valuation > Valuation(w - 1)) {
      throw PrecisionError("split approximant: precision t^" + rational_to_string(error_precision) +
                           " cannot certify v(f - g) > " + rational_to_string(w - 1));
    }
    throw InternalError("split approximant: bound v(f - g) > w - 1 fails with v(f - g) = " +
                        error_valuation.to_string());
  }
  return cert;
}

}  // namespace frobcalc
