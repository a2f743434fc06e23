#include "frobcalc/tate/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "frobcalc/errors.hpp"

namespace frobcalc {

namespace {

constexpr std::int64_t kExact = LaurentElement::kExact;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a == kExact || b == kExact) return kExact;
  return a + b;
}

std::string variable_name(std::size_t nvars, std::size_t i) {
  return nvars == 1 ? "X" : "X" + std::to_string(i + 1);
}

std::string precision_text(const Rational& r) {
  if (r == Rational(0)) return "1";
  if (r == Rational(1)) return "t";
  if (r.denominator() == 1 && r > 0) return "t^" + std::to_string(r.numerator());
  return "t^(" + rational_to_string(r) + ")";
}

}  // namespace

RestrictedSeries::RestrictedSeries(std::uint32_t p, std::uint32_t d, std::size_t nvars, std::uint32_t degree_cap,
                                   std::int64_t precision_units)
    : p_(p), d_(d), nvars_(nvars), degree_cap_(degree_cap), precision_(precision_units) {
  PrimeField check(p);
  if (d == 0) throw DomainError("series ramification must be positive");
  if (nvars == 0 || nvars > kMaxVariables) {
    throw DomainError("series need between 1 and " + std::to_string(kMaxVariables) + " variables");
  }
  if (precision_units == kExact) throw DomainError("series precision must be finite");
}

RestrictedSeries RestrictedSeries::from_terms(std::uint32_t p, std::uint32_t d, std::size_t nvars,
                                              std::uint32_t degree_cap, std::int64_t precision_units,
                                              const std::map<Monomial, LaurentElement>& terms) {
  RestrictedSeries f(p, d, nvars, degree_cap, precision_units);
  std::vector<std::pair<Monomial, LaurentElement>> kept;
  for (const auto& [m, c] : terms) {
    if (m.size() != nvars) throw DomainError("series term has the wrong number of variables");
    if (c.characteristic() != p) throw DomainError("series coefficient over a different characteristic");
    if (d % c.ramification() != 0) {
      throw DomainError("series coefficient ramification " + std::to_string(c.ramification()) +
                        " does not divide " + std::to_string(d));
    }
    if (m.degree() > degree_cap) continue;
    LaurentElement r = c.refined(d);
    f.precision_ = std::min(f.precision_, r.precision_units());
    kept.emplace_back(m, std::move(r));
  }
  for (auto& [m, c] : kept) {
    LaurentElement r = c.exact_representative().truncated(f.precision_);
    if (!r.is_zero()) f.terms_.emplace(m, std::move(r));
  }
  return f;
}

LaurentElement RestrictedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentElement(p_, d_, precision_) : it->second;
}

std::uint32_t RestrictedSeries::max_degree() const {
  std::uint64_t out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.degree());
  return static_cast<std::uint32_t>(out);
}

RestrictedSeries RestrictedSeries::refined(std::uint32_t d2) const {
  if (d2 == d_) return *this;
  if (d2 % d_ != 0) throw DomainError("cannot refine series ramification " + std::to_string(d_) + " to " + std::to_string(d2));
  RestrictedSeries f(p_, d2, nvars_, degree_cap_, precision_ * (d2 / d_));
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, c.refined(d2));
  return f;
}

RestrictedSeries RestrictedSeries::with_precision(std::int64_t precision_units) const {
  return from_terms(p_, d_, nvars_, degree_cap_, std::min(precision_, precision_units), terms_);
}

RestrictedSeries RestrictedSeries::with_degree_cap(std::uint32_t cap) const {
  return from_terms(p_, d_, nvars_, cap, precision_, terms_);
}

void RestrictedSeries::require_compatible(const RestrictedSeries& other, const char* op) const {
  if (p_ != other.p_ || nvars_ != other.nvars_) {
    throw DomainError(std::string(op) + ": series over different rings (p " + std::to_string(p_) + " vs " +
                      std::to_string(other.p_) + ", n " + std::to_string(nvars_) + " vs " +
                      std::to_string(other.nvars_) + ")");
  }
}

RestrictedSeries RestrictedSeries::operator+(const RestrictedSeries& other) const {
  require_compatible(other, "add");
  const std::uint32_t d = common_ramification(d_, other.d_);
  if (d != d_ || d != other.d_) return refined(d) + other.refined(d);
  std::map<Monomial, LaurentElement> sum;
  for (const auto& [m, c] : terms_) sum.emplace(m, c.exact_representative());
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = sum.emplace(m, c.exact_representative());
    if (!inserted) it->second = it->second + c.exact_representative();
  }
  return from_terms(p_, d, nvars_, std::min(degree_cap_, other.degree_cap_), std::min(precision_, other.precision_),
                    sum);
}

RestrictedSeries RestrictedSeries::operator-() const {
  RestrictedSeries f = *this;
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

RestrictedSeries RestrictedSeries::operator-(const RestrictedSeries& other) const { return *this + (-other); }

RestrictedSeries RestrictedSeries::scaled(const LaurentElement& c) const {
  if (c.characteristic() != p_) throw DomainError("scale: characteristic mismatch");
  const std::uint32_t d = common_ramification(d_, c.ramification());
  if (d != d_) return refined(d).scaled(c);
  const LaurentElement cr = c.refined(d);
  if (cr.is_exact() && cr.is_zero()) return RestrictedSeries(p_, d_, nvars_, degree_cap_, precision_);
  const std::int64_t low_c = cr.is_zero() ? cr.precision_units() : cr.valuation_units();
  auto gv = gauss_valuation(*this).valuation;
  const std::int64_t low_f = is_zero() ? precision_ : gv.value().numerator() * (d_ / gv.value().denominator());
  const std::int64_t prec = std::min(sat_add(precision_, low_c), sat_add(cr.precision_units(), low_f));
  std::map<Monomial, LaurentElement> out;
  const LaurentElement ce = cr.exact_representative();
  for (const auto& [m, a] : terms_) out.emplace(m, a.exact_representative() * ce);
  return from_terms(p_, d_, nvars_, degree_cap_, prec, out);
}

std::string RestrictedSeries::to_string() const {
  std::vector<const std::pair<const Monomial, LaurentElement>*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  const MonomialOrder order = MonomialOrder::grevlex(nvars_);
  std::sort(ordered.begin(), ordered.end(), [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
  std::ostringstream os;
  for (const auto* t : ordered) {
    const Monomial& m = t->first;
    const LaurentElement c = t->second.exact_representative();
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(nvars_, i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coeff = c.to_string();
    if (c.terms().size() > 1) coeff = "(" + coeff + ")";
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
    os << " + ";
  }
  os << "O(deg " << degree_cap_ << "; " << precision_text(precision()) << ")";
  return os.str();
}

bool RestrictedSeries::operator==(const RestrictedSeries& other) const {
  if (p_ != other.p_ || nvars_ != other.nvars_ || degree_cap_ != other.degree_cap_) return false;
  if (d_ != other.d_) {
    const std::uint32_t d = common_ramification(d_, other.d_);
    return refined(d) == other.refined(d);
  }
  return precision_ == other.precision_ && terms_ == other.terms_;
}

GaussNorm gauss_valuation(const RestrictedSeries& f) {
  Valuation best = Valuation::infinity();
  for (const auto& [m, c] : f.terms()) best = std::min(best, c.valuation());
  return GaussNorm{best};
}

std::map<Monomial, Coeff> residue_part(const RestrictedSeries& f, std::int64_t w_units) {
  std::map<Monomial, Coeff> out;
  for (const auto& [m, c] : f.terms()) {
    Coeff r = c.coefficient_units(w_units);
    if (r != 0) out.emplace(m, r);
  }
  return out;
}

namespace {

std::int64_t gauss_units(const RestrictedSeries& f) {
  std::int64_t best = kExact;
  for (const auto& [m, c] : f.terms()) best = std::min(best, c.valuation_units());
  return best;
}

std::uint64_t min_degree(const std::map<Monomial, Coeff>& part) {
  std::uint64_t best = UINT64_MAX;
  for (const auto& [m, c] : part) best = std::min(best, m.degree());
  return best;
}

}  // namespace

TateProduct tate_mul(const RestrictedSeries& f0, const RestrictedSeries& g0) {
  if (f0.characteristic() != g0.characteristic() || f0.nvars() != g0.nvars()) {
    throw DomainError("tate_mul: series over different rings");
  }
  const std::uint32_t d = common_ramification(f0.ramification(), g0.ramification());
  const RestrictedSeries f = f0.refined(d);
  const RestrictedSeries g = g0.refined(d);
  const std::uint32_t cap = std::min(f.degree_cap(), g.degree_cap());
  const std::int64_t vf = f.is_zero() ? f.precision_units() : gauss_units(f);
  const std::int64_t vg = g.is_zero() ? g.precision_units() : gauss_units(g);
  const std::int64_t prec = std::min(f.precision_units() + vg, g.precision_units() + vf);

  std::map<Monomial, LaurentElement> acc;
  for (const auto& [mf, cf] : f.terms()) {
    const LaurentElement ef = cf.exact_representative();
    for (const auto& [mg, cg] : g.terms()) {
      if (mf.degree() + mg.degree() > cap) continue;
      LaurentElement term = (ef * cg.exact_representative()).truncated(prec);
      auto [it, inserted] = acc.emplace(mf * mg, term);
      if (!inserted) it->second = it->second + term;
    }
  }
  TateProduct out{RestrictedSeries::from_terms(f.characteristic(), d, f.nvars(), cap, prec, acc), true};
  if (f.is_zero() || g.is_zero()) return out;
  out.leading_part_survives = min_degree(residue_part(f, vf)) + min_degree(residue_part(g, vg)) <= cap &&
                              vf + vg < prec;
  if (out.leading_part_survives && gauss_valuation(out.product).valuation != Valuation(Rational(vf + vg, d))) {
    throw InternalError("tate_mul: surviving leading parts but Gauss valuations do not add");
  }
  return out;
}

}  // namespace frobcalc
