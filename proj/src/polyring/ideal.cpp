#include "frobcalc/polyring/ideal.hpp"

#include <algorithm>

#include "frobcalc/errors.hpp"
#include "frobcalc/polyring/groebner.hpp"

namespace frobcalc {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring(), "ideal");
}

Ideal Ideal::zero(RingPtr ring) { return from_reduced_basis(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return from_reduced_basis(std::move(ring), {one});
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal out(std::move(ring), basis);
  std::call_once(out.cache_->once, [&] { out.cache_->basis = std::move(basis); });
  return out;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(generators_); });
  return cache_->basis;
}

Ideal Ideal::groebner() const { return from_reduced_basis(ring_, groebner_basis()); }

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "normal_form");
  return frobcalc::normal_form(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "containment");
  if (is_unit() || other.generators_.empty()) return true;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_zero(); });
}

bool Ideal::is_unit() const {
  if (std::any_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_unit(); })) {
    return true;
  }
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_unit();
}

bool Ideal::operator==(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return groebner_basis() == other.groebner_basis();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial h = f * g;
      if (!h.is_zero()) gens.push_back(std::move(h));
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) {
    Polynomial h = g * f;
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return Ideal(a.ring(), std::move(gens));
}

bool member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

Ideal intersect(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "intersect");
  const RingPtr& ring = i.ring();
  if (i.is_zero() || j.is_unit()) return i;
  if (j.is_zero() || i.is_unit()) return j;
  if (j.contains(i)) return i;
  if (i.contains(j)) return j;

  // Elimination ring k[t, x_1..x_n] with t eliminated first.
  const auto& base = ring->order();
  std::vector<std::string> names{"@t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<std::uint8_t> precedence{0};
  for (auto v : base.precedence()) precedence.push_back(static_cast<std::uint8_t>(v + 1));
  RingPtr elim = make_ring(ring->characteristic(), names, MonomialOrder(base.kind(), precedence, 1));

  std::vector<std::size_t> shift(ring->nvars());
  for (std::size_t v = 0; v < shift.size(); ++v) shift[v] = v + 1;
  Polynomial t = Polynomial::variable(elim, 0);
  Polynomial one_minus_t = Polynomial::constant(elim, 1) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : i.groebner_basis()) gens.push_back(t * f.in_ring(elim, shift));
  for (const auto& g : j.groebner_basis()) gens.push_back(one_minus_t * g.in_ring(elim, shift));
  std::vector<Polynomial> gb = reduced_groebner_basis(gens);

  std::vector<std::size_t> unshift(elim->nvars());
  unshift[0] = 0;  // only applied to t-free polynomials
  for (std::size_t v = 1; v < unshift.size(); ++v) unshift[v] = v - 1;
  std::vector<Polynomial> result;
  for (const auto& g : gb) {
    if (g.leading_monomial()[0] != 0) continue;
    result.push_back(g.in_ring(ring, unshift));
  }
  // With a plain base order the t-free part of the reduced basis is the
  // reduced basis of the intersection.
  if (base.elimination_block() == 0) {
    std::reverse(result.begin(), result.end());
    result = reduce_basis(std::move(result));
    return Ideal::from_reduced_basis(ring, std::move(result));
  }
  return Ideal(ring, std::move(result));
}

Ideal intersect(std::span<const Ideal> ideals, const RingPtr& ring) {
  Ideal acc = Ideal::unit(ring);
  for (const auto& ideal : ideals) acc = intersect(acc, ideal);
  return acc;
}

Ideal colon(const Ideal& i, const Polynomial& g) {
  require_same_ring(i.ring(), g.ring(), "colon");
  if (g.is_zero() || i.contains(g)) return Ideal::unit(i.ring());
  Ideal meet = intersect(i, Ideal(i.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.groebner_basis()) gens.push_back(divide_exact(h, g));
  return Ideal(i.ring(), std::move(gens));
}

ColonResult colon(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "colon");
  if (j.is_zero()) return ColonResult{Ideal::unit(i.ring()), true};
  Ideal acc = Ideal::unit(i.ring());
  for (const auto& g : j.generators()) {
    if (g.is_zero()) continue;
    acc = intersect(acc, colon(i, g));
  }
  return ColonResult{acc.groebner(), false};
}

std::optional<std::uint64_t> quotient_dimension(const Ideal& ideal, std::uint64_t max_monomials) {
  const auto& gb = ideal.groebner_basis();
  const std::size_t n = ideal.ring()->nvars();
  if (gb.empty()) return n == 0 ? std::optional<std::uint64_t>(1) : std::nullopt;
  if (gb.front().is_unit()) return 0;
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : gb) {
    const Monomial& m = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] != 0) {
        ++support;
        var = v;
      }
    }
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  std::uint64_t box = 1;
  for (auto b : bound) {
    if (b == 0) return std::nullopt;
    box *= b;
    if (box > max_monomials) throw CapError("standard monomial enumeration exceeds cap");
  }
  std::uint64_t count = 0;
  Monomial m(n);
  for (std::uint64_t idx = 0; idx < box; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t v = 0; v < n; ++v) {
      m.set(v, static_cast<std::uint32_t>(rest % bound[v]));
      rest /= bound[v];
    }
    bool standard = std::none_of(gb.begin(), gb.end(),
                                 [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    if (standard) ++count;
  }
  return count;
}

Ideal point_ideal(const RingPtr& ring, std::span<const Coeff> point) {
  if (point.size() != ring->nvars()) throw DomainError("point length does not match the ring");
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < point.size(); ++v) {
    gens.push_back(Polynomial::variable(ring, v) - Polynomial::constant(ring, point[v]));
  }
  return Ideal(ring, std::move(gens));
}

std::optional<std::vector<Coeff>> rational_point_of(const Ideal& m) {
  const RingPtr& ring = m.ring();
  const auto& gb = m.groebner_basis();
  if (gb.size() != ring->nvars()) return std::nullopt;
  std::vector<Coeff> point(ring->nvars(), 0);
  std::vector<bool> seen(ring->nvars(), false);
  for (const auto& g : gb) {
    if (g.size() > 2 || g.leading_monomial().degree() != 1) return std::nullopt;
    std::size_t v = 0;
    while (g.leading_monomial()[v] == 0) ++v;
    if (seen[v]) return std::nullopt;
    seen[v] = true;
    if (g.size() == 2) {
      if (!g.terms()[1].mono.is_one()) return std::nullopt;
      point[v] = ring->field().neg(g.terms()[1].coeff);
    }
  }
  return point;
}

}  // namespace frobcalc
