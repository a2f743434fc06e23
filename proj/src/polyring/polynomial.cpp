#include "frobcalc/polyring/polynomial.hpp"

#include <algorithm>

#include "frobcalc/errors.hpp"

namespace frobcalc {

namespace {

void sort_and_combine(const Ring& ring, std::vector<Term>& terms) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Coeff c = 0;
    std::size_t j = i;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c = field.add(c, terms[j].coeff);
      ++j;
    }
    if (c != 0) terms[out++] = Term{terms[i].mono, c};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms, bool)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->field().reduce(c);
  std::vector<Term> terms;
  if (v != 0) terms.push_back(Term{Monomial(ring->nvars()), v});
  return Polynomial(std::move(ring), std::move(terms), true);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  if (m.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
  c %= ring->characteristic();
  std::vector<Term> terms;
  if (c != 0) terms.push_back(Term{m, c});
  return Polynomial(std::move(ring), std::move(terms), true);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
    t.coeff %= ring->characteristic();
  }
  sort_and_combine(*ring, terms);
  return Polynomial(std::move(ring), std::move(terms), true);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "add");
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = order.compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Coeff s = field.add(terms_[i].coeff, other.terms_[j].coeff);
      if (s != 0) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  out.insert(out.end(), other.terms_.begin() + j, other.terms_.end());
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::sub_mul_term(const Monomial& m, Coeff c, const Polynomial& g) const {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) {
    return Term{g.terms_[k].mono * m, field.neg(field.mul(g.terms_[k].coeff, c))};
  };
  while (i < terms_.size() && j < g.terms_.size()) {
    Term s = shifted(j);
    int cmp = order.compare(terms_[i].mono, s.mono);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(s);
      ++j;
    } else {
      Coeff v = field.add(terms_[i].coeff, s.coeff);
      if (v != 0) out.push_back(Term{s.mono, v});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  for (; j < g.terms_.size(); ++j) out.push_back(shifted(j));
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, ring_->field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::scaled(Coeff c) const { return mul_term(Monomial(ring_->nvars()), c); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "multiply");
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return other.mul_term(terms_[0].mono, terms_[0].coeff);
  if (other.terms_.size() == 1) return mul_term(other.terms_[0].mono, other.terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  const auto& field = ring_->field();
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.push_back(Term{a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  }
  sort_and_combine(*ring_, out);
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(std::uint64_t q) const {
  // Monomial scaling by q preserves any monomial order, so no re-sort.
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono.scaled(q), t.coeff});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), true);
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (point.size() != ring_->nvars()) {
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                      std::to_string(ring_->nvars()) + " variables");
  }
  const auto& field = ring_->field();
  Coeff total = 0;
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i] % field.characteristic(), t.mono[i]));
    }
    total = field.add(total, v);
  }
  return total;
}

Polynomial Polynomial::in_ring(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (target->characteristic() != ring_->characteristic()) throw RingMismatch("different characteristic");
  if (var_map.size() != ring_->nvars()) throw DomainError("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= target->nvars()) throw DomainError("variable map out of range");
      m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    }
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw RingMismatch("different variables");
  std::vector<std::size_t> identity(ring_->nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return in_ring(target, identity);
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const std::uint32_t p = ring_->characteristic();
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    // Coefficients above p/2 print as negatives: x^3 - y^2 rather than x^3 + 4*y^2.
    bool negative = p > 2 && t.coeff > p / 2;
    Coeff mag = negative ? p - t.coeff : t.coeff;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(t.mono, ring_->names());
    if (mono == "1") {
      s += std::to_string(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += std::to_string(mag) + "*" + mono;
    }
  }
  return s;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "divide");
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& field = f.ring()->field();
  Coeff inv_lc = field.inv(g.leading_coeff());
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) {
      throw InternalError("exact division failed: " + g.to_string() + " does not divide " + f.to_string());
    }
    Monomial m = lt.mono / g.leading_monomial();
    Coeff c = field.mul(lt.coeff, inv_lc);
    quotient.push_back(Term{m, c});
    rest = rest.sub_mul_term(m, c, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

FieldElement evaluate_at_point(const Polynomial& f, std::span<const FieldElement> point) {
  const std::uint32_t p = f.ring()->characteristic();
  std::vector<Coeff> values;
  values.reserve(point.size());
  for (const auto& a : point) {
    if (a.modulus != p) throw RingMismatch("point coordinates are not in GF(" + std::to_string(p) + ")");
    values.push_back(a.value % p);
  }
  return FieldElement{f.evaluate(values), p};
}

}  // namespace frobcalc
