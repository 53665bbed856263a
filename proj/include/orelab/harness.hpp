#pragma once

// Theorem harness: implication checks evaluated over the generated corpus.
// A check's conclusions are only evaluated on instances where all of its
// hypotheses hold; a check without a qualifying instance is reported as
// vacuous, never as a pass.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "orelab/corpus.hpp"
#include "orelab/properties.hpp"
#include "orelab/replay.hpp"

namespace orelab {

/// premises ⇒ conclusions, evaluated under the check's hypotheses.
struct Implication {
  std::vector<std::string> premises;
  std::vector<std::string> conclusions;

  std::string label() const {
    auto join = [](const std::vector<std::string>& v) {
      if (v.empty()) return std::string("true");
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : " & ") + x;
      return s;
    };
    return join(premises) + " => " + join(conclusions);
  }
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::vector<std::string> hypotheses;
  std::vector<Implication> implications;
  bool zero_derivation_only = false;  // δ plays no role; run once per σ
};

/// Every ordered pair of `statements` as an implication.
inline std::vector<Implication> implication_matrix(const std::vector<std::string>& statements) {
  std::vector<Implication> out;
  for (const auto& p : statements) {
    for (const auto& q : statements) {
      if (p != q) out.push_back({{p}, {q}});
    }
  }
  return out;
}

inline std::vector<Implication> equivalence(const std::string& p, const std::string& q) {
  return {{{p}, {q}}, {{q}, {p}}};
}

/// The checks run by verify-paper.
inline std::vector<TheoremCheck> default_theorem_checks() {
  const std::string sa = "sigma-delta-skew-armendariz";
  const std::string c = "condition-c-sigma";
  return {
      {"powers-annihilate", "skew Armendariz + (C_sigma): ab = 0 gives sigma^n(a)b = delta^n(a)b = 0", {sa, c},
       {{{}, {"power-annihilation"}}}},
      {"word-maps-annihilate", "skew Armendariz + (C_sigma) + reversible: ab = 0 gives a f_i^j(b) = 0",
       {sa, c, "reversible"}, {{{}, {"word-annihilation"}}}},
      {"coefficients-annihilate", "skew Armendariz + (C_sigma): fg = 0 gives a_i b_j = 0", {sa, c},
       {{{}, {"sigma-delta-armendariz"}}}},
      {"coefficients-annihilate-via-symmetry", "skew Armendariz (a_0 b_j form) + R[x] symmetric: fg = 0 gives a_i b_j = 0",
       {"skew-armendariz", "poly-symmetric"}, {{{}, {"sigma-delta-armendariz"}}}},
      {"triple-coefficients-annihilate", "skew Armendariz + (C_sigma): fgh = 0 gives a_i b_j c_k = 0", {sa, c},
       {{{}, {"triple-coefficient-annihilation"}}}},
      {"reversible-transfer", "skew Armendariz + (C_sigma): R reversible iff R[x] reversible", {sa, c},
       equivalence("reversible", "poly-reversible")},
      {"symmetric-transfer", "skew Armendariz + (C_sigma): R symmetric iff R[x] symmetric", {sa, c},
       equivalence("symmetric", "poly-symmetric")},
      {"sigma-armendariz-split", "sigma-Armendariz iff sigma-skew Armendariz + (C_sigma)", {},
       {{{"sigma-armendariz"}, {"sigma-skew-armendariz"}},
        {{"sigma-armendariz"}, {c}},
        {{"sigma-skew-armendariz", c}, {"sigma-armendariz"}}},
       true},
      {"reversible-vs-sigma-reversible", "(C_sigma): reversible iff sigma-reversible", {c},
       equivalence("reversible", "sigma-reversible")},
      {"symmetric-vs-sigma-symmetric", "(C_sigma): symmetric iff sigma-symmetric", {c},
       equivalence("symmetric", "sigma-symmetric")},
      {"reversible-equivalences", "skew Armendariz + (C_sigma): four reversibility statements agree", {sa, c},
       implication_matrix({"reversible", "sigma-reversible", "right-sigma-reversible", "poly-reversible"})},
      {"symmetric-equivalences", "skew Armendariz + (C_sigma): four symmetry statements agree", {sa, c},
       implication_matrix({"symmetric", "sigma-symmetric", "right-sigma-symmetric", "poly-symmetric"})},
      {"idempotents-fixed", "right sigma-reversible + sigma(1) = 1: sigma(e) = e, delta(e) = 0, R abelian",
       {"right-sigma-reversible", "sigma-unital"}, {{{}, {"idempotents-fixed", "abelian"}}}},
      {"baer-transfer", "right sigma-reversible + (C_sigma) + sigma(1) = 1: Baer passes to R[x]",
       {"right-sigma-reversible", c, "sigma-unital"}, {{{"baer"}, {"poly-baer-transfer"}}}},
      {"quasi-baer-transfer", "right sigma-reversible + (C_sigma) + sigma(1) = 1: quasi-Baer passes to R[x]",
       {"right-sigma-reversible", c, "sigma-unital"}, {{{"quasi-baer"}, {"poly-quasi-baer-transfer"}}}},
      {"pq-baer-transfer", "right sigma-reversible + (C_sigma) + sigma(1) = 1: p.q.-Baer passes to R[x]",
       {"right-sigma-reversible", c, "sigma-unital"}, {{{"pq-baer"}, {"poly-pq-baer-transfer"}}}},
  };
}

struct HarnessOptions {
  SearchOptions search{};               // dmax and the work cap for pair searches
  std::size_t triple_work_cap = 150'000'000;  // exhaustive for every corpus ring up to order 8
  InstanceStream stream{};
  std::vector<std::string> only;        // check ids to run; empty means all
  unsigned jobs = 1;
};

/// A conclusion that failed on a qualifying instance.
struct Violation {
  std::size_t instance;
  std::string instance_label;
  std::string implication;
  Verdict verdict;
};

struct ImplicationOutcome {
  std::string label;
  std::size_t qualifying = 0;  // hypotheses and premises hold
  std::size_t violations = 0;
};

struct CheckOutcome {
  std::string id;
  std::string statement;
  std::size_t total = 0;
  std::size_t qualifying = 0;      // hypotheses hold
  std::size_t non_qualifying = 0;
  std::size_t errored = 0;
  bool sampled = false;            // some verdict ranged over a random sample
  std::vector<ImplicationOutcome> implications;
  std::vector<Violation> violations;
  std::vector<std::string> errors;
  std::chrono::nanoseconds elapsed{0};

  bool vacuous() const {
    return qualifying == 0 ||
           std::any_of(implications.begin(), implications.end(), [](const auto& i) { return i.qualifying == 0; });
  }
  bool passed() const { return violations.empty() && errored == 0 && !vacuous(); }
};

struct RunReport {
  std::vector<FixtureOutcome> fixtures;
  std::vector<CheckOutcome> checks;
  std::size_t instances = 0;
  std::size_t replayed = 0;  // failing verdicts whose witnesses were replayed
  std::vector<std::string> replay_failures;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const {
    return replay_failures.empty() &&
           std::all_of(fixtures.begin(), fixtures.end(), [](const auto& f) { return f.ok(); }) &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  }
};

namespace detail {

/// Memoized verdicts for one instance. Failing verdicts are replayed as they
/// are computed.
class VerdictCache {
 public:
  VerdictCache(const Instance<FiniteRing>& inst, const HarnessOptions& opt) : inst_(inst), opt_(opt) {}

  const Verdict& get(const std::string& property) {
    auto it = cache_.find(property);
    if (it != cache_.end()) return it->second;
    SearchOptions so = opt_.search;
    if (property == "poly-symmetric" || property == "triple-coefficient-annihilation") so.work_cap = opt_.triple_work_cap;
    Verdict v = run_property(inst_, property, so);
    if (v.fails()) {
      ++replayed;
      if (!replay(inst_, v)) replay_failures.push_back(inst_.label() + ": " + format_line(v));
    }
    return cache_.emplace(property, std::move(v)).first->second;
  }
  bool holds(const std::string& property) { return get(property).holds(); }

  std::size_t replayed = 0;
  std::vector<std::string> replay_failures;

 private:
  const Instance<FiniteRing>& inst_;
  const HarnessOptions& opt_;
  std::map<std::string, Verdict> cache_;
};

struct CheckInstanceResult {
  enum class Kind { skipped, non_qualifying, qualifying, errored } kind = Kind::skipped;
  std::vector<bool> premise_held;   // per implication
  std::vector<std::optional<Violation>> violation;
  std::string error;
  bool sampled = false;
  std::chrono::nanoseconds elapsed{0};
};

inline CheckInstanceResult run_check_on(const TheoremCheck& check, const CorpusInstance& ci, VerdictCache& cache) {
  CheckInstanceResult r;
  if (check.zero_derivation_only && !ci.instance.delta.is_zero()) return r;
  const auto start = std::chrono::steady_clock::now();
  auto note_sampled = [&](const std::string& p) { r.sampled = r.sampled || cache.get(p).sampled; };
  try {
    bool hyp = true;
    for (const auto& h : check.hypotheses) {
      note_sampled(h);
      if (!cache.holds(h)) {
        hyp = false;
        break;
      }
    }
    if (!hyp) {
      r.kind = CheckInstanceResult::Kind::non_qualifying;
    } else {
      r.kind = CheckInstanceResult::Kind::qualifying;
      for (const auto& imp : check.implications) {
        bool prem = true;
        for (const auto& p : imp.premises) {
          note_sampled(p);
          prem = prem && cache.holds(p);
          if (!prem) break;
        }
        r.premise_held.push_back(prem);
        std::optional<Violation> viol;
        if (prem) {
          for (const auto& q : imp.conclusions) {
            note_sampled(q);
            const Verdict& v = cache.get(q);
            if (v.fails()) {
              viol = Violation{ci.index, ci.instance.label(), imp.label(), v};
              break;
            }
          }
        }
        r.violation.push_back(std::move(viol));
      }
    }
  } catch (const Error& e) {
    r.kind = CheckInstanceResult::Kind::errored;
    r.error = ci.instance.label() + ": " + e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace detail

/// Runs `checks` over `instances`. Instances are distributed over `jobs`
/// workers; results are merged by instance index, so the report does not
/// depend on scheduling.
inline std::vector<CheckOutcome> run_theorem_checks(const std::vector<TheoremCheck>& checks,
                                                    const std::vector<CorpusInstance>& instances,
                                                    const HarnessOptions& opt,
                                                    std::vector<std::string>* replay_failures = nullptr,
                                                    std::size_t* replayed = nullptr) {
  std::vector<std::vector<detail::CheckInstanceResult>> results(instances.size());
  std::vector<std::vector<std::string>> replays(instances.size());
  std::vector<std::size_t> replay_counts(instances.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      detail::VerdictCache cache(instances[i].instance, opt);
      for (const auto& check : checks) results[i].push_back(detail::run_check_on(check, instances[i], cache));
      replays[i] = std::move(cache.replay_failures);
      replay_counts[i] = cache.replayed;
    }
  };
  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CheckOutcome> out;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckOutcome o;
    o.id = checks[c].id;
    o.statement = checks[c].statement;
    for (const auto& imp : checks[c].implications) o.implications.push_back({imp.label(), 0, 0});
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& r = results[i][c];
      o.elapsed += r.elapsed;
      o.sampled = o.sampled || r.sampled;
      using K = detail::CheckInstanceResult::Kind;
      if (r.kind == K::skipped) continue;
      ++o.total;
      if (r.kind == K::non_qualifying) ++o.non_qualifying;
      if (r.kind == K::errored) {
        ++o.errored;
        o.errors.push_back(r.error);
      }
      if (r.kind != K::qualifying) continue;
      ++o.qualifying;
      for (std::size_t k = 0; k < r.premise_held.size(); ++k) {
        if (r.premise_held[k]) ++o.implications[k].qualifying;
        if (r.violation[k]) {
          ++o.implications[k].violations;
          o.violations.push_back(*r.violation[k]);
        }
      }
    }
    out.push_back(std::move(o));
  }
  if (replay_failures) {
    for (auto& v : replays) replay_failures->insert(replay_failures->end(), v.begin(), v.end());
  }
  if (replayed) {
    for (std::size_t n : replay_counts) *replayed += n;
  }
  return out;
}

/// Every fixture expectation followed by every theorem check over the corpus.
inline RunReport verify_paper(const HarnessOptions& opt, const std::filesystem::path& fixtures_dir = default_fixtures_dir()) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  for (const auto& f : all_fixtures(fixtures_dir)) report.fixtures.push_back(check_fixture(f, opt.search));
  auto checks = default_theorem_checks();
  if (!opt.only.empty()) {
    for (const auto& id : opt.only) {
      if (std::none_of(checks.begin(), checks.end(), [&](const auto& c) { return c.id == id; })) {
        throw UnsupportedSpec("unknown theorem check '" + id + "'");
      }
    }
    std::erase_if(checks, [&](const auto& c) { return std::find(opt.only.begin(), opt.only.end(), c.id) == opt.only.end(); });
  }
  const auto instances = generate_instances(opt.stream);
  report.instances = instances.size();
  report.checks = run_theorem_checks(checks, instances, opt, &report.replay_failures, &report.replayed);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// ---------------------------------------------------------------------------
// Report rendering. Timing is kept out of the machine report unless asked
// for, so identical inputs give byte-identical output.

inline constexpr const char* kReportSchema = "orelab-report/1";

inline nlohmann::ordered_json to_json(const FixtureOutcome& f, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["fixture"] = f.fixture;
  j["ok"] = f.ok();
  j["expectations"] = nlohmann::ordered_json::array();
  for (const auto& e : f.expectations) {
    nlohmann::ordered_json x;
    x["property"] = e.expected.property;
    x["expected"] = to_string(e.expected.status);
    x["instance"] = e.instance;
    x["ok"] = e.ok;
    x["verdict"] = e.actual ? to_json(*e.actual, with_timing) : nlohmann::ordered_json(nullptr);
    if (!e.problems.empty()) x["problems"] = e.problems;
    j["expectations"].push_back(x);
  }
  return j;
}

inline nlohmann::ordered_json to_json(const CheckOutcome& c, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["result"] = c.passed() ? "pass" : c.vacuous() && c.violations.empty() && c.errored == 0 ? "vacuous" : "fail";
  j["instances"] = c.total;
  j["qualifying"] = c.qualifying;
  j["non_qualifying"] = c.non_qualifying;
  j["errored"] = c.errored;
  j["sampled"] = c.sampled;
  j["implications"] = nlohmann::ordered_json::array();
  for (const auto& i : c.implications) {
    j["implications"].push_back({{"implication", i.label}, {"qualifying", i.qualifying}, {"violations", i.violations}});
  }
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : c.violations) {
    j["violations"].push_back(
        {{"instance", v.instance}, {"label", v.instance_label}, {"implication", v.implication}, {"verdict", to_json(v.verdict)}});
  }
  if (!c.errors.empty()) j["errors"] = c.errors;
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(c.elapsed).count();
  return j;
}

inline nlohmann::ordered_json to_json(const RunReport& r, const HarnessOptions& opt, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["options"] = {{"dmax", opt.search.dmax},
                  {"work_cap", opt.search.work_cap},
                  {"triple_work_cap", opt.triple_work_cap},
                  {"seed", opt.search.seed}};
  j["passed"] = r.passed();
  j["fixtures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.fixtures) j["fixtures"].push_back(to_json(f, with_timing));
  j["corpus_instances"] = r.instances;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c, with_timing));
  j["replayed"] = r.replayed;
  j["replay_failures"] = r.replay_failures;
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

inline std::string format_report(const RunReport& r, bool with_timing = true) {
  std::string s;
  auto secs = [](std::chrono::nanoseconds d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", std::chrono::duration<double>(d).count());
    return std::string(buf);
  };
  s += "fixtures:\n";
  for (const auto& f : r.fixtures) {
    s += "  " + std::string(f.ok() ? "ok   " : "FAIL ") + f.fixture + "\n";
    for (const auto& e : f.expectations) {
      s += "    " + std::string(e.ok ? "ok   " : "FAIL ") + e.expected.property + " expected " +
           to_string(e.expected.status);
      if (e.actual) s += ", got " + format_line(*e.actual);
      s += "\n";
      for (const auto& p : e.problems) s += "      " + p + "\n";
    }
  }
  s += "theorem checks over " + std::to_string(r.instances) + " corpus instances:\n";
  for (const auto& c : r.checks) {
    const char* tag = c.passed() ? "pass " : (c.vacuous() && c.violations.empty() && c.errored == 0) ? "VACUOUS " : "FAIL ";
    s += "  " + std::string(tag) + c.id + ": " + std::to_string(c.qualifying) + " qualifying, " +
         std::to_string(c.non_qualifying) + " non-qualifying, " + std::to_string(c.errored) + " errored" +
         (c.sampled ? ", sampled" : "") + (with_timing ? " (" + secs(c.elapsed) + ")" : "") + "\n";
    for (const auto& i : c.implications) {
      s += "      " + i.label + ": " + std::to_string(i.qualifying) + " qualifying, " + std::to_string(i.violations) +
           " violations\n";
    }
    for (const auto& v : c.violations) {
      s += "      violation on #" + std::to_string(v.instance) + " " + v.instance_label + " [" + v.implication +
           "]: " + format_line(v.verdict) + "\n";
    }
    for (const auto& e : c.errors) s += "      error: " + e + "\n";
  }
  s += "replayed " + std::to_string(r.replayed) + " failing verdicts, " + std::to_string(r.replay_failures.size()) +
       " did not reproduce\n";
  for (const auto& f : r.replay_failures) s += "replay failure: " + f + "\n";
  s += std::string(r.passed() ? "PASSED" : "FAILED") + (with_timing ? " in " + secs(r.elapsed) : "") + "\n";
  return s;
}

}  // namespace orelab
