#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace orelab;

namespace {

std::shared_ptr<const FiniteRing> z2() { return rings::zmod(2); }
std::shared_ptr<const FiniteRing> z4() { return rings::zmod(4); }
std::shared_ptr<const FiniteRing> z2z2() { return rings::direct_product({z2(), z2()}); }
std::shared_ptr<const FiniteRing> t44() { return rings::triangular2(z4(), z4(), rings::canonical_action(*z4(), *z4())); }

}  // namespace

TEST(FiniteRing, ZmodArithmetic) {
  const auto r = z4();
  EXPECT_EQ(r->order(), 4u);
  const Elem two = r->parse("2");
  EXPECT_EQ(r->mul(two, two), r->zero());
  EXPECT_EQ(r->add(r->parse("3"), r->one()), r->zero());
  EXPECT_TRUE(r->is_commutative());
}

TEST(FiniteRing, ElementReprRoundTrips) {
  for (const auto& entry : catalogue()) {
    const auto& r = *entry.ring;
    for (Elem a = 0; a < r.order(); ++a) EXPECT_EQ(r.parse(r.repr(a)), a) << entry.name;
  }
}

TEST(FiniteRing, CatalogueRingsSatisfyAxiomsByBruteForce) {
  for (const auto& entry : catalogue()) {
    const auto& r = *entry.ring;
    const Elem n = static_cast<Elem>(r.order());
    for (Elem a = 0; a < n; ++a) {
      EXPECT_EQ(r.mul(r.one(), a), a);
      EXPECT_EQ(r.add(a, r.neg(a)), 0u);
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) << entry.name;
          ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))) << entry.name;
        }
      }
    }
  }
}

TEST(FiniteRing, DirectProductIsComponentwise) {
  const auto r = z2z2();
  const Elem e1 = r->parse("(1,0)"), e2 = r->parse("(0,1)");
  EXPECT_EQ(r->mul(e1, e2), r->zero());
  EXPECT_EQ(r->add(e1, e2), r->one());
  EXPECT_EQ(r->mul(e1, e1), e1);
}

TEST(FiniteRing, TriangularRingHasOrderSixteen) {
  const auto r = t44();
  EXPECT_EQ(r->order(), 16u);
  const Elem off = r->parse("[0,1]");
  EXPECT_EQ(r->mul(off, off), r->zero());
}

TEST(FiniteRing, UpperTriangularIsNotCommutative) {
  const auto r = rings::upper_triangular2(z2());
  EXPECT_EQ(r->order(), 8u);
  EXPECT_FALSE(r->is_commutative());
}

TEST(FiniteRing, TablesViolatingAxiomsAreRejected) {
  // Z2 addition with a multiplication that has no identity.
  EXPECT_THROW(rings::from_tables("bad", {"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 0}), AxiomViolation);
  // Non-associative addition.
  EXPECT_THROW(rings::from_tables("bad", {"0", "1", "2"}, {0, 1, 2, 1, 0, 0, 2, 0, 1}, {0, 0, 0, 0, 1, 2, 0, 2, 1}),
               AxiomViolation);
}

TEST(FiniteRing, UnknownElementIsAParseError) { EXPECT_THROW(z4()->parse("7"), ParseError); }

TEST(FiniteRing, OrderCapIsEnforced) { EXPECT_THROW(rings::zmod(17), UnsupportedSpec); }

TEST(Idempotents, MatchBruteForceOnEveryCatalogueRing) {
  for (const auto& entry : catalogue()) {
    EXPECT_EQ(enumerate_idempotents(*entry.ring), oracle::idempotents(*entry.ring)) << entry.name;
  }
}

TEST(Idempotents, KnownLists) {
  const auto r4 = z4();
  EXPECT_EQ(enumerate_idempotents(*r4), (std::vector<Elem>{r4->parse("0"), r4->parse("1")}));
  EXPECT_EQ(enumerate_idempotents(*z2z2()).size(), 4u);
  const auto gf4 = rings::zp_quotient(2, {1, 1, 1});
  EXPECT_EQ(enumerate_idempotents(*gf4).size(), 2u);
}

TEST(Endomorphism, IdentityValidatesAndIsUnital) {
  const auto id = morphisms::identity(z4());
  EXPECT_TRUE(id.unital());
  EXPECT_TRUE(id.injective());
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.validation(), Validation::exhaustive);
}

TEST(Endomorphism, SwapIsAnAutomorphism) {
  const auto r = z2z2();
  const auto s = morphisms::swap(r);
  EXPECT_EQ(s(r->parse("(1,0)")), r->parse("(0,1)"));
  EXPECT_TRUE(s.unital());
  EXPECT_TRUE(s.injective());
}

TEST(Endomorphism, NonHomomorphismIsRejected) {
  const auto r = z4();
  // a -> 2a is additive but not multiplicative.
  EXPECT_THROW(morphisms::from_table(r, {0, 2, 0, 2}, "double"), NotAHomomorphism);
}

TEST(Endomorphism, CompositionOfValidatedMapsValidates) {
  const auto r = t44();
  const auto n = morphisms::negate_offdiag(r);
  const auto nn = morphisms::compose(n, n);
  EXPECT_TRUE(nn.is_identity());
}

TEST(Endomorphism, EvaluationAtZeroOnPolynomialsIsSampled) {
  const auto r = std::make_shared<const Gf2PolyRing>(3);
  const auto s = morphisms::eval_at_zero(r);
  EXPECT_EQ(s.validation(), Validation::sampled);
  EXPECT_EQ(r->repr(s(r->parse("1+x"))), "1");
}

TEST(Derivation, InnerDerivationSatisfiesLeibnizExhaustively) {
  const auto r = t44();
  const auto s = morphisms::negate_offdiag(r);
  for (Elem c = 0; c < r->order(); ++c) {
    const auto d = derivations::inner(s, c);
    for (Elem a = 0; a < r->order(); ++a) {
      for (Elem b = 0; b < r->order(); ++b) {
        ASSERT_EQ(d(r->mul(a, b)), r->add(r->mul(s(a), d(b)), r->mul(d(a), b)));
      }
    }
  }
}

TEST(Derivation, InnerOfZeroIsZero) {
  const auto s = morphisms::identity(z4());
  EXPECT_TRUE(derivations::inner(s, 0).is_zero());
}

TEST(Derivation, UnitalSigmaForcesDeltaOfOneToVanish) {
  for (const auto& entry : catalogue()) {
    for (const auto& s : enumerate_endomorphisms(entry.ring)) {
      for (const auto& d : corpus_derivations(s)) EXPECT_EQ(d(entry.ring->one()), 0u) << entry.name;
    }
  }
}

TEST(Derivation, NonDerivationTableIsRejected) {
  const auto s = morphisms::identity(z2());
  EXPECT_THROW(derivations::from_table(s, {0, 1}, "bad"), NotADerivation);
}

TEST(Derivation, InnerDerivationsOnTriangularRing) {
  const auto r = t44();
  const auto s = morphisms::negate_offdiag(r);
  // c = [0,1]: c·a = σ(a)·c for every a, so the inner derivation vanishes.
  EXPECT_TRUE(derivations::inner(s, r->parse("[0,1]")).is_zero());
  // c = 1: δ(a) = a − σ(a) doubles the off-diagonal entry.
  const auto d = derivations::inner(s, r->one());
  EXPECT_EQ(d(r->parse("[3,1]")), r->parse("[0,2]"));
}

TEST(EndomorphismEnumeration, MatchesBruteForceOnEveryCatalogueRing) {
  for (const auto& entry : catalogue()) {
    std::set<std::vector<Elem>> found;
    for (const auto& s : enumerate_endomorphisms(entry.ring)) found.insert(tabulate(*entry.ring, s));
    const auto brute = oracle::unital_endomorphisms(*entry.ring);
    EXPECT_EQ(found, std::set<std::vector<Elem>>(brute.begin(), brute.end())) << entry.name;
  }
}

TEST(EndomorphismEnumeration, IdentityComesFirst) {
  for (const auto& entry : catalogue()) EXPECT_TRUE(enumerate_endomorphisms(entry.ring).front().is_identity());
}

TEST(EndomorphismEnumeration, ZmodFourHasOnlyTheIdentity) { EXPECT_EQ(enumerate_endomorphisms(z4()).size(), 1u); }

TEST(EndomorphismEnumeration, TwoByTwoProductAutomorphismsAreIdentityAndSwap) {
  const auto r = z2z2();
  std::set<std::vector<Elem>> automorphisms;
  for (const auto& s : enumerate_endomorphisms(r)) {
    if (s.injective()) automorphisms.insert(tabulate(*r, s));
  }
  EXPECT_EQ(automorphisms, (std::set<std::vector<Elem>>{tabulate(*r, morphisms::identity(r)),
                                                        tabulate(*r, morphisms::swap(r))}));
  // The two coordinate projections followed by the diagonal are unital too.
  EXPECT_EQ(enumerate_endomorphisms(r).size(), 4u);
}
