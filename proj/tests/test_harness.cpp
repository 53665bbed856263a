#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace orelab;

namespace {

HarnessOptions small_options() {
  HarnessOptions h;
  h.search.dmax = 1;
  h.stream.rings = {"Z2", "Z4", "Z2+Z2", "GF4", "Z2[t]/(t^2)", "UT2(Z2)"};
  return h;
}

TheoremCheck find_check(const std::string& id) {
  for (auto& c : default_theorem_checks()) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no check " + id);
}

}  // namespace

TEST(TheoremChecks, IdsAreUniqueAndEveryNameIsAProperty) {
  std::set<std::string> ids;
  const auto& names = property_names();
  for (const auto& c : default_theorem_checks()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.implications.empty());
    for (const auto& h : c.hypotheses) EXPECT_NE(std::find(names.begin(), names.end(), h), names.end()) << h;
    for (const auto& i : c.implications) {
      for (const auto& p : i.premises) EXPECT_NE(std::find(names.begin(), names.end(), p), names.end()) << p;
      for (const auto& q : i.conclusions) EXPECT_NE(std::find(names.begin(), names.end(), q), names.end()) << q;
    }
  }
}

TEST(TheoremChecks, EquivalenceMatricesAreComplete) {
  EXPECT_EQ(find_check("reversible-equivalences").implications.size(), 12u);
  EXPECT_EQ(find_check("symmetric-equivalences").implications.size(), 12u);
  EXPECT_EQ(find_check("reversible-transfer").implications.size(), 2u);
}

TEST(Harness, CountsAddUp) {
  const auto h = small_options();
  const auto instances = generate_instances(h.stream);
  for (const auto& c : run_theorem_checks(default_theorem_checks(), instances, h)) {
    EXPECT_EQ(c.total, c.qualifying + c.non_qualifying + c.errored) << c.id;
    std::size_t violations = 0;
    for (const auto& i : c.implications) {
      EXPECT_LE(i.qualifying, c.qualifying);
      violations += i.violations;
    }
    EXPECT_EQ(violations, c.violations.size());
  }
}

TEST(Harness, ConclusionsAreOnlyEvaluatedUnderHypotheses) {
  // UT2(Z2) is not reversible, so it counts as non-qualifying and the check
  // is vacuous rather than violated.
  TheoremCheck check{"test", "reversible rings are abelian", {"reversible"}, {{{}, {"abelian"}}}};
  auto h = small_options();
  h.stream.rings = {"UT2(Z2)"};
  const auto out = run_theorem_checks({check}, generate_instances(h.stream), h);
  EXPECT_EQ(out[0].qualifying, 0u);
  EXPECT_TRUE(out[0].vacuous());
  EXPECT_FALSE(out[0].passed());
}

TEST(Harness, FalseImplicationIsCaughtWithAReplayableWitness) {
  // Commutative rings need not be reduced: Z4 is a counterexample.
  TheoremCheck check{"test", "reversible rings are reduced", {"reversible"}, {{{}, {"reduced"}}}};
  auto h = small_options();
  const auto instances = generate_instances(h.stream);
  const auto out = run_theorem_checks({check}, instances, h);
  ASSERT_FALSE(out[0].violations.empty());
  EXPECT_FALSE(out[0].passed());
  const auto& v = out[0].violations.front();
  EXPECT_TRUE(replay(instances[v.instance].instance, v.verdict));
}

TEST(Harness, ErrorsAreCountedNotHidden) {
  TheoremCheck check{"test", "searches rejected past the cap", {}, {{{}, {"sigma-delta-skew-armendariz"}}}};
  auto h = small_options();
  h.search.work_cap = 10;
  h.search.on_cap = CapPolicy::reject;
  const auto out = run_theorem_checks({check}, generate_instances(h.stream), h);
  EXPECT_GT(out[0].errored, 0u);
  EXPECT_FALSE(out[0].passed());
  EXPECT_EQ(out[0].errors.size(), out[0].errored);
}

TEST(Harness, ZeroDerivationChecksSkipOtherInstances) {
  auto h = small_options();
  const auto instances = generate_instances(h.stream);
  std::size_t zero = 0;
  for (const auto& ci : instances) zero += ci.instance.delta.is_zero();
  const auto out = run_theorem_checks({find_check("sigma-armendariz-split")}, instances, h);
  EXPECT_EQ(out[0].total, zero);
}

TEST(Harness, ParallelRunMatchesSerialRun) {
  auto h = small_options();
  const auto instances = generate_instances(h.stream);
  const auto serial = run_theorem_checks(default_theorem_checks(), instances, h);
  h.jobs = 3;
  const auto parallel = run_theorem_checks(default_theorem_checks(), instances, h);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(to_json(serial[i]).dump(), to_json(parallel[i]).dump());
}

TEST(Harness, ReseedingKeepsThePassStatus) {
  auto h = small_options();
  h.only = {"reversible-transfer", "idempotents-fixed", "reversible-vs-sigma-reversible"};
  const RunReport a = verify_paper(h);
  h.stream.seed = 12345;
  h.stream.shuffle = true;
  h.search.seed = 12345;
  const RunReport b = verify_paper(h);
  EXPECT_EQ(a.passed(), b.passed());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].qualifying, b.checks[i].qualifying);
    EXPECT_EQ(a.checks[i].violations.size(), b.checks[i].violations.size());
  }
}

TEST(Harness, MachineReportIsDeterministicWithoutTiming) {
  auto h = small_options();
  h.only = {"symmetric-transfer"};
  const auto a = to_json(verify_paper(h), h).dump();
  const auto b = to_json(verify_paper(h), h).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed"), std::string::npos);
  EXPECT_NE(a.find("\"schema\":\"orelab-report/1\""), std::string::npos);
}

TEST(Harness, UnknownCheckIsAnError) {
  auto h = small_options();
  h.only = {"no-such-check"};
  EXPECT_THROW(verify_paper(h), UnsupportedSpec);
}

TEST(Harness, TextReportFlagsVacuousChecks) {
  TheoremCheck check{"vacuous-check", "never qualifies", {"reversible"}, {{{}, {"abelian"}}}};
  auto h = small_options();
  h.stream.rings = {"UT2(Z2)"};
  RunReport r;
  r.checks = run_theorem_checks({check}, generate_instances(h.stream), h);
  EXPECT_NE(format_report(r, false).find("VACUOUS vacuous-check"), std::string::npos);
  EXPECT_FALSE(r.passed());
}
