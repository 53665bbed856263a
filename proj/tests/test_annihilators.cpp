#include <gtest/gtest.h>

#include <chrono>

#include "oracles.hpp"

using namespace orelab;

namespace {

std::shared_ptr<const FiniteRing> z2z2() {
  const auto z2 = rings::zmod(2);
  return rings::direct_product({z2, z2});
}

std::vector<CatalogueEntry> rings_up_to(std::size_t order) {
  std::vector<CatalogueEntry> out;
  for (auto& e : catalogue()) {
    if (e.ring->order() <= order) out.push_back(e);
  }
  return out;
}

oracle::Mask mask(ElementSet s) {
  oracle::Mask m = 0;
  for (Elem a : s.members()) m |= oracle::bit(a);
  return m;
}

}  // namespace

TEST(ElementSet, SetOperations) {
  const ElementSet a = ElementSet::of({0, 2}), b = ElementSet::of({2, 3});
  EXPECT_EQ((a & b), ElementSet::of({2}));
  EXPECT_EQ((a | b).size(), 3u);
  EXPECT_TRUE(ElementSet::all(4).contains(3));
  EXPECT_FALSE(ElementSet::all(4).contains(4));
}

TEST(ElementSet, FormatAndParseRoundTrip) {
  const auto r = z2z2();
  const ElementSet s = ElementSet::of({0, r->parse("(1,0)")});
  EXPECT_EQ(format_set(*r, s), "{(0,0),(1,0)}");
  EXPECT_EQ(parse_set(*r, "{(0,0), (1,0)}"), s);
  EXPECT_EQ(parse_set(*r, "{}"), ElementSet{});
  EXPECT_THROW(parse_set(*r, "(0,0)"), ParseError);
}

TEST(RightAnnihilator, MatchesDefinitionForEverySubset) {
  for (const auto& entry : rings_up_to(8)) {
    const auto& r = *entry.ring;
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << r.order()); ++x) {
      ElementSet xs;
      for (Elem a = 0; a < r.order(); ++a) {
        if (x & oracle::bit(a)) xs.insert(a);
      }
      ASSERT_EQ(mask(right_annihilator(r, xs).members), oracle::right_annihilator(r, x)) << entry.name;
    }
  }
}

TEST(RightAnnihilator, UnionBecomesIntersection) {
  for (const auto& entry : rings_up_to(8)) {
    const auto& r = *entry.ring;
    const std::size_t n = r.order();
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); x += 3) {
      for (oracle::Mask y = 0; y < (oracle::Mask{1} << n); y += 5) {
        EXPECT_EQ(oracle::right_annihilator(r, x | y),
                  oracle::right_annihilator(r, x) & oracle::right_annihilator(r, y));
      }
    }
  }
}

TEST(RightAnnihilator, OfPrincipalIdealMatchesDefinition) {
  for (const auto& entry : catalogue()) {
    const auto& r = *entry.ring;
    for (Elem a = 0; a < r.order(); ++a) {
      EXPECT_EQ(mask(right_annihilator_of_principal(r, a)), oracle::right_annihilator(r, oracle::right_ideal_of(r, a)));
    }
  }
}

TEST(RightAnnihilator, ZmodFourTwo) {
  const auto r = rings::zmod(4);
  EXPECT_EQ(right_annihilator(*r, r->parse("2")), ElementSet::of({0, r->parse("2")}));
  EXPECT_FALSE(idempotent_generator(*r, ElementSet::of({0, r->parse("2")})));
  EXPECT_EQ(idempotent_generator(*r, ElementSet::all(4)), std::optional<Elem>(r->one()));
}

TEST(RightAnnihilator, FieldHasOnlyTrivialAnnihilators) {
  const auto r = rings::zp_quotient(2, {1, 1, 1});
  std::set<std::uint64_t> seen;
  for (const auto& s : subset_annihilators(*r).sets) seen.insert(s.members.bits());
  EXPECT_EQ(seen, (std::set<std::uint64_t>{ElementSet::all(4).bits(), ElementSet::of({0}).bits()}));
}

TEST(RightAnnihilator, IntersectionClosureEqualsAllSubsetAnnihilators) {
  for (const auto& entry : rings_up_to(8)) {
    const auto& r = *entry.ring;
    std::set<oracle::Mask> brute;
    for (oracle::Mask x = 1; x < (oracle::Mask{1} << r.order()); ++x) brute.insert(oracle::right_annihilator(r, x));
    std::set<oracle::Mask> closure;
    for (const auto& s : subset_annihilators(r).sets) {
      closure.insert(mask(s.members));
      // The recorded generator really has this annihilator.
      EXPECT_EQ(mask(right_annihilator(r, parse_set(r, s.generator)).members), mask(s.members));
    }
    EXPECT_EQ(closure, brute) << entry.name;
  }
}

TEST(RightIdeal, GeneratedIdealIsTheSmallestClosedSet) {
  for (const auto& entry : rings_up_to(8)) {
    const auto& r = *entry.ring;
    const auto ideals = oracle::right_ideals(r);
    for (Elem a = 0; a < r.order(); ++a) {
      for (Elem b = a; b < r.order(); ++b) {
        const oracle::Mask got = mask(right_ideal_generated(r, ElementSet::of({a, b})));
        oracle::Mask smallest = ~oracle::Mask{0};
        for (oracle::Mask i : ideals) {
          if ((i & oracle::bit(a)) && (i & oracle::bit(b)) && __builtin_popcountll(i) < __builtin_popcountll(smallest)) {
            smallest = i;
          }
        }
        EXPECT_EQ(got, smallest) << entry.name;
      }
    }
  }
}

TEST(BaerFamily, AgreesWithBruteForce) {
  for (const auto& entry : rings_up_to(8)) {
    const auto& r = *entry.ring;
    EXPECT_EQ(is_baer(r).holds(), oracle::baer(r)) << entry.name;
    EXPECT_EQ(is_quasi_baer(r).holds(), oracle::quasi_baer(r)) << entry.name;
    EXPECT_EQ(is_pq_baer(r).holds(), oracle::pq_baer(r)) << entry.name;
  }
}

TEST(BaerFamily, ZmodFourIsNotBaer) {
  const auto r = rings::zmod(4);
  const Verdict v = is_baer(*r);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->get("annihilator"), "{0,2}");
  const Instance<FiniteRing> inst{"z4", derivations::zero(morphisms::identity(r))};
  EXPECT_TRUE(replay(inst, v));
}

TEST(BaerFamily, ProductOfTwoFieldsIsBaer) {
  const auto r = z2z2();
  EXPECT_EQ(is_baer(*r).status, Status::holds);
  for (const auto& s : subset_annihilators(*r).sets) EXPECT_TRUE(idempotent_generator(*r, s.members));
}

TEST(BaerFamily, MonotoneOnEveryCatalogueRing) {
  for (const auto& entry : catalogue()) {
    const auto& r = *entry.ring;
    const auto start = std::chrono::steady_clock::now();
    const bool b = is_baer(r).holds(), q = is_quasi_baer(r).holds(), p = is_pq_baer(r).holds();
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1)) << entry.name;
    EXPECT_TRUE(!b || q) << entry.name;
    EXPECT_TRUE(!q || p) << entry.name;
  }
}

TEST(BaerTransfer, BaerRingsTransferUnderHypotheses) {
  SearchOptions opt;
  opt.dmax = 1;
  for (const auto& r : {rings::zmod(2), rings::zmod(3), z2z2(), rings::zp_quotient(2, {1, 1, 1})}) {
    const Instance<FiniteRing> inst{r->name(), derivations::zero(morphisms::identity(r))};
    for (const char* p : {"poly-baer-transfer", "poly-quasi-baer-transfer", "poly-pq-baer-transfer"}) {
      const Verdict v = run_property(inst, p, opt);
      EXPECT_EQ(v.status, Status::holds_up_to_bound) << r->name() << " " << p << " " << format_line(v);
    }
  }
}

TEST(BaerTransfer, FailsWhenCoefficientRingIsNotBaer) {
  const auto r = rings::zmod(4);
  const Instance<FiniteRing> inst{"z4", derivations::zero(morphisms::identity(r))};
  SearchOptions opt;
  opt.dmax = 1;
  const Verdict v = run_property(inst, "poly-baer-transfer", opt);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.witness->get("e"), "none");
  EXPECT_TRUE(replay(inst, v));
}

TEST(BaerTransfer, WorkCapRejectsOrSamples) {
  const auto z4 = rings::zmod(4);
  const auto r = rings::triangular2(z4, z4, rings::canonical_action(*z4, *z4));
  const Instance<FiniteRing> inst{"t", derivations::zero(morphisms::identity(r))};
  SearchOptions opt;
  opt.dmax = 1;
  opt.work_cap = 1000;
  opt.on_cap = CapPolicy::reject;
  EXPECT_THROW(run_property(inst, "poly-baer-transfer", opt), BoundTooLarge);
  opt.on_cap = CapPolicy::sample;
  const Verdict v = run_property(inst, "poly-pq-baer-transfer", opt);
  EXPECT_TRUE(v.sampled);
}
