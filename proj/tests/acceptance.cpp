// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobcalc/errors.hpp"
#include "frobcalc/frobenius/frobenius.hpp"
#include "frobcalc/fsing/fsing.hpp"
#include "frobcalc/polyring/io.hpp"
#include "frobcalc/random.hpp"
#include "frobcalc/tate/division.hpp"
#include "frobcalc/tate/split.hpp"
#include "support/oracles.hpp"

using namespace frobcalc;

namespace {

using SeriesTerms = std::map<Monomial, LaurentElement>;

// Tallies cases and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what();
  }
  bool passed() const { return failures_ == 0 && cases_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(cases_ - failures_) + "/" + std::to_string(cases_) + " checks";
    if (!first_.empty()) s += "; first failure: " + first_;
    return s;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<Polynomial> bracket_gens(const Ideal& i, std::uint64_t q) {
  std::vector<Polynomial> out;
  for (const auto& g : i.generators()) out.push_back(g.pow(q));
  return out;
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return oracle::contained(a, b) && oracle::contained(b, a);
}

SeriesTerms exact_terms(const RestrictedSeries& f) {
  SeriesTerms out;
  for (const auto& [m, c] : f.terms()) out.emplace(m, c.exact_representative());
  return out;
}

SeriesTerms plus(SeriesTerms a, const SeriesTerms& b) {
  for (const auto& [m, c] : b) {
    auto [it, inserted] = a.emplace(m, c);
    if (!inserted) it->second = it->second + c;
  }
  return a;
}

// ---------------------------------------------------------------------------

Tally filtration_criterion() {
  Tally t;
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t c : {1u, 2u, 3u}) {
      std::vector<std::string> names;
      for (std::uint32_t v = 0; v < c; ++v) names.push_back("x" + std::to_string(v + 1));
      auto ring = make_ring(p, names);
      for (std::uint32_t b : {2u, 3u, 4u}) {
        const std::string tag = "p=" + std::to_string(p) + " c=" + std::to_string(c) + " b=" + std::to_string(b);
        FiltrationReport report = filtration_verify(c, b, ring);
        std::uint64_t expected = 1;
        for (std::uint32_t v = 0; v < c; ++v) expected *= b;
        t.check(report.all_pass, [&] { return tag + ": library check failed"; });
        t.check(report.steps.size() == expected, [&] { return tag + ": step count"; });
        t.check(report.quotient_dimension == expected, [&] { return tag + ": quotient dimension"; });

        // Independent rebuild of the chain: I_k = (x_i^b) + (x^alpha_j : j >= k)
        // with alpha_j in lex order; I_k : x^alpha_k must be (x_1..x_c).
        std::vector<Polynomial> powers;
        for (std::uint32_t v = 0; v < c; ++v) powers.push_back(Polynomial::variable(ring, v).pow(b));
        std::vector<Monomial> alphas;
        for (std::uint64_t idx = 0; idx < expected; ++idx) {
          Monomial m(c);
          std::uint64_t rest = idx;
          for (std::uint32_t v = c; v-- > 0;) {
            m.set(v, static_cast<std::uint32_t>(rest % b));
            rest /= b;
          }
          alphas.push_back(m);
        }
        for (std::size_t k = 0; k < alphas.size(); ++k) {
          t.check(report.steps[k].alpha == alphas[k].exponents(), [&] { return tag + ": step order"; });
          std::vector<Polynomial> next = powers;
          for (std::size_t j = k + 1; j < alphas.size(); ++j) next.push_back(Polynomial::monomial(ring, alphas[j]));
          const Polynomial xa = Polynomial::monomial(ring, alphas[k]);
          bool ok = !oracle::member(xa, next);
          for (std::uint32_t v = 0; v < c; ++v) ok = ok && oracle::member(Polynomial::variable(ring, v) * xa, next);
          t.check(ok, [&] { return tag + ": oracle colon at step " + std::to_string(k); });
        }
        // Standard monomials of (x_i^b): those below degree c(b-1)+1 that
        // survive reduction; none survive in the next degree.
        std::uint64_t standard = 0;
        bool bounded = true;
        for (const auto& m : gen::monomials_up_to(c, c * (b - 1) + 1)) {
          const bool survives = !oracle::reduce(Polynomial::monomial(ring, m), powers).is_zero();
          if (m.degree() == c * (b - 1) + 1) {
            bounded = bounded && !survives;
          } else if (survives) {
            ++standard;
          }
        }
        t.check(standard == expected && bounded, [&] { return tag + ": oracle dimension " + std::to_string(standard); });
      }
    }
  }
  return t;
}

// Up-closed subsets of the monomials of degree <= 4 in two variables,
// represented as membership masks.
struct MonomialLattice {
  std::vector<Monomial> monos;
  std::vector<std::uint32_t> up_closed;

  MonomialLattice() {
    monos = gen::monomials_up_to(2, 4);
    for (std::uint32_t mask = 0; mask < (1u << monos.size()); ++mask) {
      bool closed = true;
      for (std::size_t i = 0; i < monos.size() && closed; ++i) {
        if (!(mask >> i & 1u)) continue;
        for (std::size_t j = 0; j < monos.size(); ++j) {
          if (monos[i].divides(monos[j]) && !(mask >> j & 1u)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) up_closed.push_back(mask);
    }
  }
};

Tally root_criterion() {
  Tally t;
  gen::Rng rng(101);
  int index = 0;
  std::size_t contained_cases = 0, escaping_cases = 0, proper_roots = 0;
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t e : {1u, 2u}) {
      const BracketExponent ex(e);
      const std::uint64_t q = ex.q(p);
      for (int trial = 0; trial < 13 && index < 50; ++trial, ++index) {
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, q >= 9 ? 2 : 3));
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(n);
        auto ring = make_ring(p, names);
        const Ideal j = gen::ideal(rng, ring, 2, q >= 9 ? 4 : 5, 3);
        const std::string tag = "p=" + std::to_string(p) + " e=" + std::to_string(e) + " J=" + j.to_string();
        const Ideal root = frobenius_root(j, ex);
        if (!root.is_unit()) ++proper_roots;

        // Adjunction against 20 candidates; half contain the root.
        for (int k = 0; k < 20; ++k) {
          std::vector<Polynomial> cand;
          if (k % 2 == 0) {
            cand = root.generators();
            cand.push_back(gen::polynomial(rng, ring, 2, 2));
          } else {
            cand = gen::ideal(rng, ring, 2, 2, 2).generators();
          }
          const Ideal i(ring, cand);
          const bool lhs = oracle::contained(j.generators(), bracket_gens(i, q));
          const bool rhs = oracle::contained(root.generators(), cand);
          ++(lhs ? contained_cases : escaping_cases);
          t.check(lhs == rhs, [&] { return tag + ": adjunction fails for I=" + i.to_string(); });
        }
        // root(I^[q]) = I and root_1 o root_1 = root_2.
        const Ideal powered = bracket_power(j, ex);
        t.check(same_ideal(frobenius_root(powered, ex).generators(), j.generators()),
                [&] { return tag + ": root of bracket power"; });
        if (e == 2) {
          const BracketExponent one(1);
          t.check(same_ideal(frobenius_root(frobenius_root(j, one), one).generators(), root.generators()),
                  [&] { return tag + ": composition"; });
        } else {
          const BracketExponent two(2);
          t.check(same_ideal(frobenius_root(root, ex).generators(), frobenius_root(j, two).generators()),
                  [&] { return tag + ": composition"; });
        }
      }
    }
  }

  t.check(contained_cases > 50 && escaping_cases > 50 && proper_roots > 10, [&] {
    return "degenerate sample: " + std::to_string(contained_cases) + " contained, " + std::to_string(escaping_cases) +
           " not, " + std::to_string(proper_roots) + " proper roots";
  });

  // Monomial J: the root is the least monomial ideal generated in degree
  // <= 4 whose bracket power contains J.
  const MonomialLattice lattice;
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t e : {1u, 2u}) {
      const BracketExponent ex(e);
      const std::uint64_t q = ex.q(p);
      auto ring = make_ring(p, {"x", "y"});
      for (int trial = 0; trial < 10; ++trial) {
        const Ideal j = gen::monomial_ideal(rng, ring, 3, 4);
        auto satisfies = [&](std::uint32_t mask) {
          for (const auto& g : j.generators()) {
            bool hit = false;
            for (std::size_t i = 0; i < lattice.monos.size() && !hit; ++i) {
              hit = (mask >> i & 1u) && lattice.monos[i].scaled(q).divides(g.leading_monomial());
            }
            if (!hit) return false;
          }
          return true;
        };
        std::uint32_t least = (1u << lattice.monos.size()) - 1;
        bool found = false;
        for (std::uint32_t mask : lattice.up_closed) {
          if (!satisfies(mask)) continue;
          found = true;
          least &= mask;
        }
        const Ideal root = frobenius_root(j, ex);
        std::uint32_t root_mask = 0;
        for (std::size_t i = 0; i < lattice.monos.size(); ++i) {
          if (root.contains(Polynomial::monomial(ring, lattice.monos[i]))) root_mask |= 1u << i;
        }
        bool generated_low = true;
        for (const auto& g : root.generators()) generated_low = generated_low && g.total_degree() <= 4;
        t.check(found && satisfies(least) && least == root_mask && generated_low,
                [&] { return "monomial J=" + j.to_string() + " root " + root.to_string(); });
      }
    }
  }
  return t;
}

// All polynomials of degree <= 4 in x, y over F_p with coefficient vector
// indexed by `code` (base p digits).
Polynomial hypersurface(const RingPtr& ring, const std::vector<Monomial>& monos, std::uint64_t code) {
  std::vector<Term> terms;
  const std::uint32_t p = ring->characteristic();
  for (const auto& m : monos) {
    const auto c = static_cast<Coeff>(code % p);
    code /= p;
    if (c != 0) terms.push_back(Term{m, c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Tally fedder_criterion() {
  Tally t;
  gen::Rng rng(103);
  const BracketExponent e1(1);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = make_ring(p, {"x", "y"});
    const auto monos = gen::monomials_up_to(2, 4);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) total *= p;
    const bool exhaustive = total <= (1u << 16);
    const std::uint64_t count = exhaustive ? total : 500;
    const Polynomial one = Polynomial::constant(ring, 1);
    std::size_t pure_points = 0, impure_points = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      Polynomial f = exhaustive ? hypersurface(ring, monos, k) : gen::polynomial(rng, ring, 4, 15);
      if (f.is_constant()) {
        if (!exhaustive) --k;
        continue;
      }
      const QuotientPresentation pres{Ideal(ring, {f})};
      const Ideal locus = locus_ideal(pres, one, e1);
      for (const auto& a : oracle::zeros({f})) {
        const bool pointwise = fedder_pure_at(pres, one, a, e1);
        const bool global = !point_ideal(ring, a).contains(locus);
        t.check(pointwise == global, [&] { return "f=" + f.to_string() + " over F_" + std::to_string(p); });
        ++(pointwise ? pure_points : impure_points);
      }
    }
    t.check(pure_points > 0 && impure_points > 0, [&] { return "degenerate sample over F_" + std::to_string(p); });
  }
  return t;
}

Tally qualitative_criterion() {
  Tally t;
  const BracketExponent e1(1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = parse_ring("GF(" + std::to_string(p) + ")[x,y]");
    const Polynomial node = parse_polynomial(ring, "x*y");
    const QuotientPresentation pres{Ideal(ring, {node})};
    LocusReport report = fpure_locus(pres);
    t.check(report.pure_everywhere && report.locus_ideal.is_unit(), [&] { return "node locus, p=" + std::to_string(p); });
    for (const auto& a : oracle::zeros({node})) {
      // (f^[p] : f) = (f^(p-1)); pure at a iff f^(p-1) is outside m_a^[p].
      t.check(!oracle::in_bracket_of_point(node.pow(p - 1), a, p) && fedder_pure_at(pres, Polynomial::constant(ring, 1), a, e1),
              [&] { return "node at a point, p=" + std::to_string(p); });
    }
  }
  {
    auto ring = parse_ring("GF(2)[x,y]");
    const Polynomial cusp = parse_polynomial(ring, "y^2+x^3");
    const QuotientPresentation pres{Ideal(ring, {cusp})};
    LocusReport report = fpure_locus(pres, LocusOptions{true});
    const std::vector<Polynomial> origin{Polynomial::variable(ring, 0), Polynomial::variable(ring, 1)};
    t.check(same_ideal(report.locus_ideal.generators(), origin), [&] { return "cusp locus " + report.locus_ideal.to_string(); });
    for (const auto& a : oracle::zeros({cusp})) {
      const bool at_origin = a[0] == 0 && a[1] == 0;
      const bool brute_pure = !oracle::in_bracket_of_point(cusp, a, 2);
      t.check(brute_pure == !at_origin, [&] { return "cusp brute force"; });
      t.check(fedder_pure_at(pres, Polynomial::constant(ring, 1), a, e1) == !at_origin, [&] { return "cusp pointwise"; });
    }
    t.check(report.rational_points.has_value(), [&] { return "cusp scan missing"; });
    if (report.rational_points) {
      for (const auto& v : *report.rational_points) {
        t.check(v.pure == !(v.point[0] == 0 && v.point[1] == 0), [&] { return "cusp scan verdict"; });
      }
    }
  }
  // (0): 1 -> F^e_* r splits for nonzero r once q exceeds its degrees.
  gen::Rng rng(104);
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t n : {1u, 2u, 3u}) {
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      auto ring = make_ring(p, names);
      std::vector<Polynomial> rs{Polynomial::constant(ring, 1), Polynomial::variable(ring, 0)};
      for (int k = 0; k < 3; ++k) rs.push_back(gen::nonzero_polynomial(rng, ring, 3, 3));
      for (const auto& r : rs) {
        std::uint32_t e = 1;
        while (BracketExponent(e).q(p) <= r.total_degree()) ++e;
        const BracketExponent ex(e);
        const std::uint64_t q = ex.q(p);
        SplitResult split = split_element_test(QuotientPresentation{Ideal::zero(ring)}, r, ex);
        const std::string tag = "(0) p=" + std::to_string(p) + " r=" + r.to_string();
        t.check(split.splits && split.certificate.has_value(), [&] { return tag + ": no certificate"; });
        if (!split.certificate) continue;
        // Evaluate the projection on c r term by term: the q-th root of the
        // coefficient is itself over F_p.
        const Polynomial cr = split.certificate->multiplier * r;
        const Monomial& a = split.certificate->functional.basis_monomial;
        std::vector<Term> image;
        for (const auto& term : cr.terms()) {
          bool matches = true;
          Monomial m(n);
          for (std::size_t v = 0; v < n; ++v) {
            if (term.mono[v] % q != a[v]) matches = false;
            m.set(v, static_cast<std::uint32_t>(term.mono[v] / q));
          }
          if (matches) image.push_back(Term{m, term.coeff});
        }
        t.check(Polynomial::from_terms(ring, image) == Polynomial::constant(ring, 1), [&] { return tag + ": certificate value"; });
      }
    }
  }
  return t;
}

Tally flatness_criterion() {
  Tally t;
  gen::Rng rng(105);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    auto ring = make_ring(p, trial % 3 == 0 ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"});
    const std::size_t count = trial % 4 == 0 ? 3 : 2;
    std::vector<Ideal> ideals;
    for (std::size_t k = 0; k < count; ++k) ideals.push_back(gen::ideal(rng, ring, 2, 2, 2));
    const BracketExponent e1(1);
    FlatnessReport report = check_intersection_flatness(ideals, e1, ring);
    t.check(report.holds, [&] { return "library reports failure, witness " + (report.witness ? report.witness->to_string() : ""); });
    // Both sides are equal as ideals under the naive basis, and every
    // generator of the intersection of powers lies in each power.
    t.check(same_ideal(report.power_of_intersection.generators(), report.intersection_of_powers.generators()),
            [&] { return "sides differ"; });
    for (const auto& i : ideals) {
      t.check(oracle::contained(report.intersection_of_powers.generators(), bracket_gens(i, p)),
              [&] { return "intersection escapes " + i.to_string(); });
    }
  }
  return t;
}

Tally trace_criterion() {
  Tally t;
  gen::Rng rng(106);
  int done = 0;
  while (done < 50) {
    const std::uint32_t p = done % 2 ? 3 : 2;
    const std::uint32_t e = done % 3 == 0 ? 2 : 1;
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const BracketExponent ex(e);
    const std::uint64_t q = ex.q(p);
    std::uint64_t qn = 1;
    for (std::size_t v = 0; v < n; ++v) qn *= q;
    if (qn > 256) continue;
    ++done;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto ring = make_ring(p, names);
    const Ideal j = gen::ideal(rng, ring, 2, 5, 3);
    TraceResult trace = trace_ideal(j, ex, true);
    const Ideal root = frobenius_root(j, ex);
    const std::string tag = "J=" + j.to_string() + " q=" + std::to_string(q);
    t.check(trace.sum_of_images.has_value() && trace.functionals && trace.functionals->size() == qn,
            [&] { return tag + ": enumeration missing"; });
    if (trace.sum_of_images) t.check(*trace.sum_of_images == root, [&] { return tag + ": library sum differs"; });
    // Images of F^e_* J under every projection: the entries of x^c g for
    // the generators g and every c in {0..q-1}^n.
    std::vector<Polynomial> images;
    for (const auto& c : gen::monomials_up_to(n, static_cast<std::uint32_t>(n * (q - 1)))) {
      bool in_box = true;
      for (std::size_t v = 0; v < n; ++v) in_box = in_box && c[v] < q;
      if (!in_box) continue;
      for (const auto& g : j.generators()) {
        for (auto& entry : oracle::frobenius_entries(g.mul_term(c, 1), q)) images.push_back(std::move(entry));
      }
    }
    t.check(same_ideal(images, root.generators()), [&] { return tag + ": oracle sum differs from root"; });
  }
  return t;
}

Tally uniform_exponent_criterion() {
  Tally t;
  gen::Rng rng(107);
  int done = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t n : {2u, 3u}) {
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      auto ring = make_ring(p, names);
      const int quota = (p == 2 && n == 2) ? 5 : 3;
      for (int k = 0; k < quota; ++k, ++done) {
        Polynomial f = gen::nonzero_polynomial(rng, ring, 5, 4);
        if (f.is_constant()) f = f + Polynomial::variable(ring, 0);
        std::uint32_t e = 0;
        try {
          e = uniform_exponent(f, 20);
        } catch (const CapError&) {
          t.check(false, [&] { return "no exponent <= 20 for " + f.to_string(); });
          continue;
        }
        t.check(e >= 1 && e <= 20, [&] { return "exponent out of range"; });
        const std::uint64_t q = BracketExponent(e).q(p);
        // Half the points on V(f) when it has any, the rest uniform.
        const auto on = oracle::zeros({f});
        for (int s = 0; s < 100; ++s) {
          std::vector<Coeff> a = (s % 2 == 0 && !on.empty())
                                     ? on[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(on.size()) - 1))]
                                     : gen::point(rng, p, n);
          t.check(!oracle::in_bracket_of_point(f, a, q), [&] { return f.to_string() + " in m^[q] at e=" + std::to_string(e); });
        }
      }
    }
  }
  t.check(done == 20, [&] { return "sample count"; });
  return t;
}

Tally gauss_criterion() {
  Tally t;
  gen::Rng rng(108);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5);
    const std::uint32_t d = static_cast<std::uint32_t>(gen::uniform(rng, 1, 3));
    LaurentElement x = gen::laurent(rng, p, d, -6, 6, 4);
    LaurentElement y = gen::laurent(rng, p, d, -6, 6, 4);
    LaurentElement z = gen::laurent(rng, p, d, -6, 6, 4);
    const Valuation vx = oracle::min_valuation(x), vy = oracle::min_valuation(y), vz = oracle::min_valuation(z);
    t.check(x.valuation() == vx, [&] { return "v(x) " + x.to_string(); });
    t.check((x * y).valuation() == vx + vy, [&] { return "v(xy)"; });
    t.check((x + y).valuation() >= std::min(vx, vy), [&] { return "v(x+y)"; });
    t.check((x + y + z).valuation() >= std::min({vx, vy, vz}), [&] { return "v(x+y+z)"; });
    t.check((-x).valuation() == vx, [&] { return "v(-x)"; });
    t.check(x.is_zero() == vx.is_infinite(), [&] { return "v(0)"; });
    if (vx != vy) t.check((x + y).valuation() == std::min(vx, vy), [&] { return "equality case"; });
    if (vy != vz) t.check((y - z).valuation() == std::min(vy, vz), [&] { return "equality case"; });
  }
  for (int trial = 0; trial < 100;) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    const std::uint32_t d = static_cast<std::uint32_t>(gen::uniform(rng, 1, p));
    RestrictedSeries f = gen::series(rng, p, d, n, 3, 64 * d, -4, 8, 3);
    RestrictedSeries g = gen::series(rng, p, d, n, 3, 64 * d, -4, 8, 3);
    if (f.is_zero() || g.is_zero()) continue;
    ++trial;
    // With the cap at the sum of degrees nothing is truncated.
    f = f.with_degree_cap(6);
    g = g.with_degree_cap(6);
    TateProduct prod = tate_mul(f, g);
    t.check(prod.leading_part_survives, [&] { return "leading parts lost"; });
    t.check(gauss_valuation(prod.product).valuation == gauss_valuation(f).valuation + gauss_valuation(g).valuation,
            [&] { return "Gauss valuation not additive for " + f.to_string() + " * " + g.to_string(); });
    SeriesTerms full = oracle::convolve(f, g);
    Valuation v_full = Valuation::infinity();
    for (const auto& [m, c] : full) v_full = std::min(v_full, oracle::min_valuation(c));
    t.check(v_full == gauss_valuation(f).valuation + gauss_valuation(g).valuation, [&] { return "oracle product norm"; });
    t.check(oracle::agree_modulo(exact_terms(prod.product), full, prod.product.precision()), [&] { return "product terms"; });
  }
  return t;
}

std::uint32_t brute_largest_index(const RestrictedSeries& g) {
  Valuation best = Valuation::infinity();
  std::uint32_t index = 0;
  for (const auto& [m, c] : g.terms()) {
    const Valuation v = oracle::min_valuation(c);
    if (v < best || (v == best && m[0] > index)) {
      best = v;
      index = m[0];
    }
  }
  return index;
}

Tally division_criterion() {
  Tally t;
  gen::Rng rng(109);
  for (int trial = 0; trial < 100;) {
    const std::uint32_t p = trial % 3 == 0 ? 5 : (trial % 3 == 1 ? 2 : 3);
    const std::uint32_t d = static_cast<std::uint32_t>(gen::uniform(rng, 1, 2));
    RestrictedSeries f = gen::series(rng, p, d, 1, 6, 64 * d, -4, 12, 3);
    RestrictedSeries g = gen::series(rng, p, d, 1, 4, 64 * d, -4, 12, 3);
    if (g.is_zero()) continue;
    ++trial;
    T1Division div = euclid_div_T1(f, g, 64);
    const std::string tag = "f=" + f.to_string() + " g=" + g.to_string();
    t.check(div.n_g == brute_largest_index(g), [&] { return tag + ": N_g"; });
    t.check(div.remainder.is_zero() || div.remainder.max_degree() < div.n_g, [&] { return tag + ": remainder degree"; });
    t.check(div.precision_units == 64 * static_cast<std::int64_t>(div.quotient.ramification()),
            [&] { return tag + ": precision " + std::to_string(div.precision_units); });
    const SeriesTerms rhs = plus(oracle::convolve(div.quotient, g), exact_terms(div.remainder));
    t.check(oracle::agree_modulo(rhs, exact_terms(f), Rational(div.precision_units, div.quotient.ramification())),
            [&] { return tag + ": f != qg + r"; });
  }
  return t;
}

Tally split_bound_criterion() {
  Tally t;
  gen::Rng rng(110);
  for (int trial = 0; trial < 100;) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    RestrictedSeries f = gen::series(rng, p, p, n, 6, 40 * p, -2 * static_cast<std::int64_t>(p), 4 * static_cast<std::int64_t>(p), 3);
    if (f.is_zero()) continue;
    ++trial;
    for (std::int64_t w : {0, 1, 2, 3}) {
      const std::string tag = "f=" + f.to_string() + " w=" + std::to_string(w);
      std::optional<SplitCertificate> maybe;
      try {
        maybe = frobenius_split_approximant(f, Rational(w));
      } catch (const std::exception& ex) {
        t.check(false, [&] { return tag + ": " + ex.what(); });
        continue;
      }
      const SplitCertificate& cert = *maybe;
      t.check(cert.bound_holds, [&] { return tag + ": bound"; });
      // Recompute v(f - g_eps) from the stored terms.
      Valuation err = Valuation::infinity();
      std::set<Monomial> keys;
      for (const auto& [m, c] : f.terms()) keys.insert(m);
      for (const auto& [m, c] : cert.approximant.terms()) keys.insert(m);
      for (const auto& m : keys) {
        const LaurentElement diff = f.coefficient(m).exact_representative() - cert.approximant.coefficient(m).exact_representative();
        err = std::min(err, oracle::min_valuation(diff));
      }
      const Valuation reach = std::min(err, Valuation(std::min(f.precision(), cert.approximant.precision())));
      t.check(reach > Valuation(Rational(w - 1)), [&] { return tag + ": oracle bound " + reach.to_string(); });
      // Reassemble g_eps = sum_i phi_i(f) x_i from the recorded values.
      SeriesTerms g;
      for (std::size_t i = 0; i < cert.functional_values.size(); ++i) {
        SeriesTerms part;
        for (const auto& [m, c] : cert.functional_values[i].terms()) {
          part.emplace(m, c.refined(p).exact_representative() * cert.basis.vectors[i].exact_representative());
        }
        g = plus(g, part);
      }
      // Cut at the stored precision, the printed coefficients must match.
      const std::int64_t cut = cert.approximant.precision_units();
      bool identical = true;
      for (const auto& [m, c] : cert.approximant.terms()) {
        const auto it = g.find(m);
        identical = identical && it != g.end() && it->second.truncated(c.precision_units()).to_string() == c.to_string();
      }
      for (const auto& [m, c] : g) {
        identical = identical && (c.truncated(cut).is_zero() || cert.approximant.terms().count(m));
      }
      t.check(identical, [&] { return tag + ": reassembly"; });
    }
  }
  return t;
}

Tally left_inverse_criterion() {
  Tally t;
  gen::Rng rng(111);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    RestrictedSeries f = gen::series(rng, p, 1, n, 4, 40, -4, 10, 3);
    t.check(coefficientwise_split(f.refined(p)) == f, [&] { return "identity fails on " + f.to_string(); });
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    RestrictedSeries h = gen::series(rng, p, 1, n, 2, 40, -2, 6, 2);
    RestrictedSeries f = gen::series(rng, p, p, n, 2, 40 * p, -2 * static_cast<std::int64_t>(p), 12, 3);
    RestrictedSeries lhs = coefficientwise_split(tate_mul(h.refined(p), f).product);
    RestrictedSeries rhs = tate_mul(h, coefficientwise_split(f)).product;
    const Rational bound = std::min(lhs.precision(), rhs.precision());
    t.check(oracle::agree_modulo(exact_terms(lhs), exact_terms(rhs), bound),
            [&] { return "linearity fails for h=" + h.to_string() + " f=" + f.to_string(); });
  }
  return t;
}

struct Criterion {
  int number;
  const char* name;
  Tally (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "filtration chain", filtration_criterion},
      {2, "Frobenius root", root_criterion},
      {3, "Fedder local-global", fedder_criterion},
      {4, "node, cusp and (0)", qualitative_criterion},
      {5, "intersection flatness", flatness_criterion},
      {6, "trace equals root", trace_criterion},
      {7, "uniform exponent", uniform_exponent_criterion},
      {8, "ultrametric and Gauss laws", gauss_criterion},
      {9, "division in T_1", division_criterion},
      {10, "splitting bound", split_bound_criterion},
      {11, "coefficientwise left inverse", left_inverse_criterion},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
      tally = c.run();
    } catch (const std::exception& ex) {
      tally.check(false, [&] { return std::string("exception: ") + ex.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s C%d %s: %s (%.2fs)\n", tally.passed() ? "PASS" : "FAIL", c.number, c.name,
                tally.summary().c_str(), secs);
    std::fflush(stdout);
    all = all && tally.passed();
  }
  return all ? 0 : 1;
}
