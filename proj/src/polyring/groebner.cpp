#include "frobcalc/polyring/groebner.hpp"

#include <algorithm>
#include <optional>

#include "frobcalc/errors.hpp"

namespace frobcalc {

namespace {

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Working state of one Buchberger run. Polynomials are never erased from
// `polys` because pending pairs refer to them by index; `active` marks the
// current basis.
class BuchbergerRun {
 public:
  explicit BuchbergerRun(const RingPtr& ring) : order_(ring->order()) {}

  // Returns false once a unit has been found.
  bool insert(Polynomial h) {
    h = h.monic();
    if (h.is_unit()) {
      unit_found_ = true;
      return false;
    }
    polys_.push_back(std::move(h));
    active_.push_back(false);
    update(polys_.size() - 1);
    return true;
  }

  bool run() {
    while (!pairs_.empty() && !unit_found_) {
      Pair pair = pop_normal();
      Polynomial s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      Polynomial h = reduce_by_active(s);
      if (!h.is_zero() && !insert(std::move(h))) return false;
    }
    return !unit_found_;
  }

  bool unit_found() const { return unit_found_; }

  std::vector<Polynomial> basis() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(polys_[k]);
    }
    return out;
  }

 private:
  Polynomial reduce_by_active(const Polynomial& f) const {
    std::vector<Polynomial> act;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) act.push_back(polys_[k]);
    }
    return normal_form(f, act);
  }

  // Normal strategy: the pair with the smallest lcm goes first.
  Pair pop_normal() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      int c = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i))) {
        best = k;
      }
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  // Gebauer-Möller installation of a new basis element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) candidates.push_back(Pair{g, h, lh.lcm(polys_[g].leading_monomial())});
    }

    // Chain criterion among the new pairs; coprime pairs are kept for now so
    // that they can still shadow other pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = lh.coprime(polys_[p.i].leading_monomial());
      bool shadowed = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !shadowed; ++b) {
          shadowed = candidates[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !shadowed; ++b) {
          shadowed = kept[b].lcm.divides(p.lcm);
        }
      }
      if (!shadowed) kept.push_back(p);
    }

    // Coprime leading monomials: the S-polynomial reduces to zero.
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (!lh.coprime(polys_[p.i].leading_monomial())) fresh.push_back(p);
    }

    // Old pairs made redundant by h.
    std::vector<Pair> old;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  lh.lcm(polys_[p.i].leading_monomial()) != p.lcm &&
                  lh.lcm(polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) old.push_back(p);
    }
    old.insert(old.end(), fresh.begin(), fresh.end());
    pairs_ = std::move(old);

    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
    active_[h] = true;
  }

  const MonomialOrder& order_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_found_ = false;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  if (f.is_zero() || basis.empty()) return f;
  const auto& field = f.ring()->field();
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term lt = h.leading_term();
    if (const Polynomial* g = find_reducer(lt.mono, basis)) {
      require_same_ring(f.ring(), g->ring(), "normal_form");
      Coeff c = field.mul(lt.coeff, field.inv(g->leading_coeff()));
      h = h.sub_mul_term(lt.mono / g->leading_monomial(), c, *g);
    } else {
      remainder.push_back(lt);
      h = h.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  return a.sub_mul_term(l / g.leading_monomial(), field.inv(g.leading_coeff()), g);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  std::erase_if(basis, [](const Polynomial& g) { return g.is_zero(); });
  if (basis.empty()) return basis;
  for (auto& g : basis) {
    g = g.monic();
    if (g.is_unit()) return {g};
  }
  const auto& order = basis.front().ring()->order();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // Minimal basis: drop elements whose leading monomial is a multiple of
  // another's (ties keep the first).
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return m.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }
  // Tail reduction; leading monomials are untouched since the basis is minimal.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    Polynomial head = Polynomial::monomial(minimal[k].ring(), minimal[k].leading_monomial(), 1);
    minimal[k] = head + normal_form(minimal[k].tail(), others);
  }
  std::reverse(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!gens.empty()) require_same_ring(gens.front().ring(), g.ring(), "groebner");
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  BuchbergerRun run(ring);
  for (auto& g : gens) {
    if (!run.insert(g)) return {Polynomial::constant(ring, 1)};
  }
  if (!run.run()) return {Polynomial::constant(ring, 1)};
  return reduce_basis(run.basis());
}

std::vector<Polynomial> unit_cofactors(std::span<const Polynomial> generators) {
  if (generators.empty()) throw DomainError("1 is not in the zero ideal");
  const RingPtr ring = generators.front().ring();
  const auto& field = ring->field();
  const std::size_t k = generators.size();

  // Buchberger with cofactor bookkeeping and top reduction only; stops at
  // the first nonzero constant.
  struct Tracked {
    Polynomial poly;
    std::vector<Polynomial> cof;
  };
  std::vector<Tracked> basis;

  auto finish = [&](const Tracked& t) {
    Coeff inv = field.inv(t.poly.leading_coeff());
    std::vector<Polynomial> out;
    for (const auto& c : t.cof) out.push_back(c.scaled(inv));
    return out;
  };

  auto top_reduce = [&](Tracked t) {
    while (!t.poly.is_zero()) {
      const Term lt = t.poly.leading_term();
      const Tracked* red = nullptr;
      for (const auto& b : basis) {
        if (b.poly.leading_monomial().divides(lt.mono)) {
          red = &b;
          break;
        }
      }
      if (!red) break;
      Monomial m = lt.mono / red->poly.leading_monomial();
      Coeff c = field.mul(lt.coeff, field.inv(red->poly.leading_coeff()));
      t.poly = t.poly.sub_mul_term(m, c, red->poly);
      for (std::size_t i = 0; i < k; ++i) t.cof[i] = t.cof[i].sub_mul_term(m, c, red->cof[i]);
    }
    return t;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto add = [&](Tracked t) -> std::optional<std::vector<Polynomial>> {
    if (t.poly.is_zero()) return std::nullopt;
    if (t.poly.is_unit()) return finish(t);
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.emplace_back(i, basis.size());
    basis.push_back(std::move(t));
    return std::nullopt;
  };

  for (std::size_t i = 0; i < k; ++i) {
    Tracked t{generators[i], std::vector<Polynomial>(k, Polynomial(ring))};
    t.cof[i] = Polynomial::constant(ring, 1);
    if (auto done = add(top_reduce(std::move(t)))) return *done;
  }
  const auto& order = ring->order();
  while (!pairs.empty()) {
    std::size_t best = 0;
    auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& pr) {
      return basis[pr.first].poly.leading_monomial().lcm(basis[pr.second].poly.leading_monomial());
    };
    for (std::size_t q = 1; q < pairs.size(); ++q) {
      if (order.compare(lcm_of(pairs[q]), lcm_of(pairs[best])) < 0) best = q;
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const Tracked& a = basis[i];
    const Tracked& b = basis[j];
    if (a.poly.leading_monomial().coprime(b.poly.leading_monomial())) continue;
    Monomial l = a.poly.leading_monomial().lcm(b.poly.leading_monomial());
    Monomial ma = l / a.poly.leading_monomial();
    Monomial mb = l / b.poly.leading_monomial();
    Coeff ca = field.inv(a.poly.leading_coeff());
    Coeff cb = field.inv(b.poly.leading_coeff());
    Tracked s{a.poly.mul_term(ma, ca).sub_mul_term(mb, cb, b.poly), std::vector<Polynomial>(k, Polynomial(ring))};
    for (std::size_t c = 0; c < k; ++c) s.cof[c] = a.cof[c].mul_term(ma, ca).sub_mul_term(mb, cb, b.cof[c]);
    if (auto done = add(top_reduce(std::move(s)))) return *done;
  }
  throw DomainError("1 is not in the ideal");
}

}  // namespace frobcalc
