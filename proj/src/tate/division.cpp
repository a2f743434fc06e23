#include "frobcalc/tate/division.hpp"

#include <algorithm>

#include "frobcalc/errors.hpp"
#include "frobcalc/nafield/upoly.hpp"

namespace frobcalc {

namespace {

void require_one_variable(const RestrictedSeries& f, const char* what) {
  if (f.nvars() != 1) {
    throw DomainError(std::string("t1-div: ") + what + " must lie in T_1, got " + std::to_string(f.nvars()) +
                      " variables");
  }
}

Monomial power_of_x(std::uint32_t k) { return Monomial{k}; }

std::int64_t min_valuation_units(const std::map<std::uint32_t, LaurentElement>& h) {
  std::int64_t best = LaurentElement::kExact;
  for (const auto& [k, c] : h) best = std::min(best, c.valuation_units());
  return best;
}

}  // namespace

std::uint32_t largest_norm_index(const RestrictedSeries& g) {
  require_one_variable(g, "g");
  if (g.is_zero()) {
    throw PrecisionError("t1-div: g vanishes to precision t^" + rational_to_string(g.precision()) +
                         ", so N_g cannot be decided");
  }
  const Valuation v = gauss_valuation(g).valuation;
  std::uint32_t n = 0;
  for (const auto& [m, c] : g.terms()) {
    if (c.valuation() == v) n = std::max(n, m[0]);
  }
  return n;
}

T1Division euclid_div_T1(const RestrictedSeries& f0, const RestrictedSeries& g0, std::optional<std::int64_t> target) {
  require_one_variable(f0, "f");
  const std::uint32_t n_g = largest_norm_index(g0);
  if (f0.characteristic() != g0.characteristic()) throw DomainError("t1-div: characteristics differ");
  const std::uint32_t d = common_ramification(f0.ramification(), g0.ramification());
  const RestrictedSeries f = f0.refined(d);
  const RestrictedSeries g = g0.refined(d);
  const std::uint32_t p = f.characteristic();
  const PrimeField field(p);

  const std::int64_t prec =
      std::min({target.value_or(default_precision()) * static_cast<std::int64_t>(d), f.precision_units(),
                g.precision_units()});
  const std::int64_t vg = gauss_valuation(g).valuation.value().numerator() *
                          (d / gauss_valuation(g).valuation.value().denominator());
  upoly::UPoly g_bar(n_g + 1, 0);
  for (const auto& [m, c] : g.terms()) {
    if (m[0] <= n_g) g_bar[m[0]] = c.coefficient_units(vg);
  }
  upoly::trim(g_bar);

  std::map<std::uint32_t, LaurentElement> h;
  for (const auto& [m, c] : f.terms()) {
    LaurentElement r = c.exact_representative().truncated(prec);
    if (!r.is_zero()) h.emplace(m[0], r.exact_representative());
  }
  std::map<std::uint32_t, LaurentElement> q, r;
  auto accumulate = [](std::map<std::uint32_t, LaurentElement>& into, std::uint32_t k, const LaurentElement& c) {
    auto [it, inserted] = into.emplace(k, c);
    if (!inserted) it->second = it->second + c;
  };

  std::size_t rounds = 0;
  std::int64_t previous = 0;
  const std::size_t max_rounds = static_cast<std::size_t>(std::max<std::int64_t>(0, prec - min_valuation_units(h))) + 2;
  while (!h.empty()) {
    const std::int64_t w = min_valuation_units(h);
    if (rounds > 0 && w <= previous) {
      throw PrecisionError("t1-div: residual valuation did not increase (" + rational_to_string(Rational(w, d)) +
                           " after " + rational_to_string(Rational(previous, d)) + ")");
    }
    if (rounds > max_rounds) throw InternalError("t1-div: round limit exceeded");
    previous = w;
    ++rounds;

    std::uint32_t top = h.rbegin()->first;
    upoly::UPoly h_bar(top + 1, 0);
    for (const auto& [k, c] : h) h_bar[k] = c.coefficient_units(w);
    upoly::trim(h_bar);
    auto [q_bar, r_bar] = upoly::divmod(field, h_bar, g_bar);

    std::map<std::uint32_t, LaurentElement> next = h;
    for (std::size_t k = 0; k < q_bar.size(); ++k) {
      if (q_bar[k] == 0) continue;
      const auto kk = static_cast<std::uint32_t>(k);
      const LaurentElement lift = LaurentElement::monomial(p, d, w - vg, q_bar[k]);
      accumulate(q, kk, lift);
      for (const auto& [m, c] : g.terms()) accumulate(next, kk + m[0], -(lift * c.exact_representative()));
    }
    for (std::size_t k = 0; k < r_bar.size(); ++k) {
      if (r_bar[k] == 0) continue;
      const auto kk = static_cast<std::uint32_t>(k);
      const LaurentElement lift = LaurentElement::monomial(p, d, w, r_bar[k]);
      accumulate(r, kk, lift);
      accumulate(next, kk, -lift);
    }
    h.clear();
    for (auto& [k, c] : next) {
      LaurentElement t = c.truncated(prec);
      if (!t.is_zero()) h.emplace(k, t.exact_representative());
    }
  }

  auto to_series = [&](const std::map<std::uint32_t, LaurentElement>& terms, std::uint32_t cap, std::int64_t n) {
    std::map<Monomial, LaurentElement> out;
    for (const auto& [k, c] : terms) out.emplace(power_of_x(k), c);
    return RestrictedSeries::from_terms(p, d, 1, cap, n, out);
  };
  std::uint32_t q_cap = f.degree_cap();
  if (!q.empty()) q_cap = std::max(q_cap, q.rbegin()->first);
  return T1Division{to_series(q, q_cap, prec - vg), to_series(r, std::max(f.degree_cap(), n_g), prec), n_g, prec, rounds};
}

}  // namespace frobcalc
