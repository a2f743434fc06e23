#include <gtest/gtest.h>

#include "frobcalc/errors.hpp"
#include "frobcalc/polyring/groebner.hpp"
#include "frobcalc/polyring/io.hpp"
#include "frobcalc/random.hpp"
#include "support/oracles.hpp"

using namespace frobcalc;

namespace {

Ideal I(const RingPtr& r, const std::string& text) { return parse_ideal(r, text); }
Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(r, text); }

std::vector<std::string> gb_strings(const Ideal& i) { return oracle::printed(i.groebner_basis()); }

}  // namespace

TEST(Groebner, LinearEliminationLex) {
  auto r = parse_ring("GF(2)[x,y]:lex");
  EXPECT_EQ(gb_strings(I(r, "x+y; y")), (std::vector<std::string>{"x", "y"}));
}

TEST(Groebner, EmptyGeneratorsGiveZeroIdeal) {
  auto r = parse_ring("GF(3)[x,y]");
  Ideal zero(r, {});
  EXPECT_TRUE(zero.groebner_basis().empty());
  EXPECT_TRUE(zero.is_zero());
}

TEST(Groebner, CuspAndProductMatchesNaiveBuchberger) {
  auto r = parse_ring("GF(5)[x,y]");
  Ideal i = I(r, "y^2-x^3; x*y");
  EXPECT_EQ(gb_strings(i), oracle::printed(oracle::naive_groebner(i.generators())));
}

TEST(Groebner, RandomIdealsMatchNaiveBuchberger) {
  gen::Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (const char* order : {"", ":lex"}) {
      for (const char* vars : {"[x,y]", "[x,y,z]"}) {
        auto r = parse_ring("GF(" + std::to_string(p) + ")" + vars + order);
        for (int trial = 0; trial < 6; ++trial) {
          Ideal i = gen::ideal(rng, r, 3, 3, 3);
          ASSERT_EQ(gb_strings(i), oracle::printed(oracle::naive_groebner(i.generators())))
              << r->descriptor() << " " << i.to_string();
        }
      }
    }
  }
}

TEST(Groebner, BasisIsReduced) {
  gen::Rng rng(12);
  auto r = parse_ring("GF(3)[x,y,z]");
  for (int trial = 0; trial < 20; ++trial) {
    const Ideal ideal = gen::ideal(rng, r, 3, 3, 4);
    const auto& basis = ideal.groebner_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_EQ(basis[i].leading_coeff(), 1u);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : basis[i].terms()) EXPECT_FALSE(basis[j].leading_monomial().divides(t.mono));
      }
    }
  }
}

TEST(Membership, Examples) {
  auto r = parse_ring("GF(2)[x,y]");
  EXPECT_TRUE(member(P(r, "x^2"), I(r, "x")));
  EXPECT_FALSE(member(P(r, "1"), I(r, "x; y")));
  // y^2 + x^3 = 1*y^2 + x*x^2.
  Polynomial f = P(r, "y^2+x^3");
  EXPECT_EQ(P(r, "1") * P(r, "y^2") + P(r, "x") * P(r, "x^2"), f);
  EXPECT_TRUE(member(f, I(r, "x^2; y^2")));
}

TEST(Membership, CombinationsOfGeneratorsAreMembers) {
  gen::Rng rng(13);
  auto r = parse_ring("GF(5)[x,y,z]");
  for (int trial = 0; trial < 30; ++trial) {
    Ideal i = gen::ideal(rng, r, 3, 2, 3);
    Polynomial f(r);
    for (const auto& g : i.generators()) f = f + gen::polynomial(rng, r, 2, 3) * g;
    EXPECT_TRUE(i.contains(f));
    Polynomial h = gen::polynomial(rng, r, 3, 3);
    EXPECT_EQ(i.contains(h), oracle::member(h, i.generators()));
  }
}

TEST(Colon, Examples) {
  auto r2 = parse_ring("GF(2)[x,y]");
  EXPECT_EQ(colon(I(r2, "x^2"), I(r2, "x")).ideal, I(r2, "x"));
  Polynomial f = P(r2, "y^2-x^3");
  Ideal c = colon(Ideal(r2, {f.pow(2)}), Ideal(r2, {f})).ideal;
  // (f^p : f) = (f^(p-1)) in a UFD; membership both ways.
  EXPECT_TRUE(oracle::contained(c.groebner_basis(), {f}));
  EXPECT_TRUE(oracle::contained({f}, c.groebner_basis()));
  // xy already lies in (x^2, y^2, xy), so that colon is the unit ideal; the
  // filtration step that yields (x, y) divides the predecessor (x^2, y^2).
  EXPECT_TRUE(colon(I(r2, "x^2; y^2; x*y"), I(r2, "x*y")).ideal.is_unit());
  EXPECT_EQ(colon(I(r2, "x^2; y^2"), I(r2, "x*y")).ideal, I(r2, "x; y"));
}

TEST(Colon, ZeroDivisorIsFlagged) {
  auto r = parse_ring("GF(3)[x,y]");
  ColonResult c = colon(I(r, "x"), Ideal::zero(r));
  EXPECT_TRUE(c.divisor_was_zero);
  EXPECT_TRUE(c.ideal.is_unit());
}

TEST(Colon, DefiningProperty) {
  gen::Rng rng(14);
  auto r = parse_ring("GF(3)[x,y]");
  for (int trial = 0; trial < 25; ++trial) {
    Ideal i = gen::ideal(rng, r, 2, 3, 3);
    Polynomial g = gen::nonzero_polynomial(rng, r, 2, 2);
    Ideal c = colon(i, g);
    for (const auto& h : c.groebner_basis()) EXPECT_TRUE(oracle::member(h * g, i.generators()));
    for (int k = 0; k < 5; ++k) {
      Polynomial h = gen::polynomial(rng, r, 2, 3);
      if (oracle::member(h * g, i.generators())) EXPECT_TRUE(c.contains(h));
    }
  }
}

TEST(Intersect, Examples) {
  auto r = parse_ring("GF(2)[x,y]");
  EXPECT_EQ(intersect(I(r, "x"), I(r, "y")), I(r, "x*y"));
  Ideal j = I(r, "x^2+y; x*y^3");
  EXPECT_EQ(intersect(j, Ideal::unit(r)), j);
  auto r3 = parse_ring("GF(3)[x,y]");
  Ideal a = I(r3, "x; y^2");
  Ideal b = I(r3, "x^2; y");
  Ideal both = intersect(a, b);
  EXPECT_TRUE(oracle::contained(both.groebner_basis(), a.generators()));
  EXPECT_TRUE(oracle::contained(both.groebner_basis(), b.generators()));
  EXPECT_TRUE(oracle::contained(I(r3, "x^2; x*y; y^2").generators(), both.groebner_basis()));
}

TEST(Intersect, ContainsProductAndLiesInEach) {
  gen::Rng rng(15);
  auto r = parse_ring("GF(5)[x,y]");
  for (int trial = 0; trial < 20; ++trial) {
    Ideal a = gen::ideal(rng, r, 2, 2, 3);
    Ideal b = gen::ideal(rng, r, 2, 2, 3);
    Ideal c = intersect(a, b);
    EXPECT_TRUE(a.contains(c));
    EXPECT_TRUE(b.contains(c));
    EXPECT_TRUE(c.contains(a * b));
  }
  const std::vector<Ideal> none;
  EXPECT_TRUE(intersect(none, r).is_unit());
}

TEST(Evaluate, Examples) {
  auto r2 = parse_ring("GF(2)[x,y]");
  const std::vector<Coeff> ones{1, 1};
  EXPECT_EQ(P(r2, "x+y").evaluate(ones), 0u);
  EXPECT_EQ(P(r2, "1").evaluate(ones), 1u);
  auto r5 = parse_ring("GF(5)[x,y]");
  EXPECT_EQ(P(r5, "y^2+x^3").evaluate(ones), 2u);
  const std::vector<FieldElement> pt{{1, 5}, {1, 5}};
  EXPECT_EQ(evaluate_at_point(P(r5, "y^2+x^3"), pt), (FieldElement{2, 5}));
  EXPECT_EQ(P(r5, "3").evaluate(std::vector<Coeff>{4, 2}), 3u);
}

TEST(Evaluate, WrongLengthIsDomainError) {
  auto r = parse_ring("GF(5)[x,y]");
  EXPECT_THROW(P(r, "x").evaluate(std::vector<Coeff>{1}), DomainError);
}

TEST(Ideals, QuotientDimensionAndPoints) {
  auto r = parse_ring("GF(3)[x,y]");
  EXPECT_EQ(quotient_dimension(I(r, "x^2; y^3")), std::optional<std::uint64_t>(6));
  EXPECT_EQ(quotient_dimension(I(r, "x^2")), std::nullopt);
  const std::vector<Coeff> a{2, 1};
  Ideal m = point_ideal(r, a);
  EXPECT_EQ(rational_point_of(m), std::optional<std::vector<Coeff>>(a));
  EXPECT_EQ(rational_point_of(I(r, "x^2; y")), std::nullopt);
}

TEST(Ideals, UnitCofactorsCombineToOne) {
  auto r = parse_ring("GF(5)[x,y]");
  const std::vector<Polynomial> gens{P(r, "x*y - 1"), P(r, "x^2"), P(r, "y+2")};
  const auto h = unit_cofactors(gens);
  Polynomial sum(r);
  for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + h[i] * gens[i];
  EXPECT_TRUE(sum.is_unit());
  EXPECT_EQ(sum, Polynomial::constant(r, 1));
  EXPECT_THROW(unit_cofactors(std::vector<Polynomial>{P(r, "x"), P(r, "y")}), DomainError);
}

TEST(Io, PolynomialRoundTrip) {
  gen::Rng rng(16);
  auto r = parse_ring("GF(7)[x,y,z]");
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = gen::polynomial(rng, r, 4, 5);
    EXPECT_EQ(P(r, f.to_string()), f);
    EXPECT_EQ(polynomial_from_json(r, polynomial_to_json(f)), f);
  }
  EXPECT_EQ(ring_from_json(ring_to_json(*r))->descriptor(), r->descriptor());
}

TEST(Io, ParseForms) {
  auto r = parse_ring("GF(5)[x,y]");
  EXPECT_EQ(P(r, "2xy^2 - 3"), P(r, "2*x*y^2 + 2"));
  EXPECT_EQ(P(r, "x^5 + 5*y"), P(r, "x^5"));
  EXPECT_EQ(I(r, "x, y").generators().size(), 2u);
  EXPECT_EQ(r->descriptor(), "GF(5)[x,y]");
}

TEST(Io, ErrorsAreTyped) {
  auto r = parse_ring("GF(5)[x,y]");
  EXPECT_THROW(P(r, "x^"), ParseError);
  EXPECT_THROW(P(r, "x + + "), ParseError);
  EXPECT_THROW(P(r, "w"), ParseError);
  EXPECT_THROW(parse_ring("GF(4)[x]"), DomainError);
  EXPECT_THROW(parse_ring("GF(5)[x"), ParseError);
  EXPECT_THROW(parse_point(r, "1,a"), ParseError);
  EXPECT_THROW(parse_point(r, "1"), DomainError);
  auto other = parse_ring("GF(5)[x,z]");
  EXPECT_THROW(P(r, "x") + P(other, "x"), RingMismatch);
}
