// orelab: command-line front end for the deciders, the example fixtures and
// the theorem harness.
//
// Exit codes: 0 holds or holds-up-to-bound, 1 fails, 2 error.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orelab/orelab.hpp"

namespace {

using namespace orelab;
using Json = nlohmann::ordered_json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

constexpr const char* kVerdictSchema = "orelab-verdict/1";
constexpr const char* kAnnihilatorSchema = "orelab-annihilators/1";
constexpr const char* kIdempotentSchema = "orelab-idempotents/1";
constexpr const char* kSearchSchema = "orelab-search/1";

struct CommonOptions {
  std::optional<std::size_t> dmax;
  std::size_t work_cap = SearchOptions{}.work_cap;
  std::uint64_t seed = SearchOptions{}.seed;
  std::string on_cap = "sample";
  std::string format = "text";
  std::optional<std::string> fixture;
  std::string fixtures_dir = default_fixtures_dir().string();
  bool timing = false;

  bool machine() const { return format == "machine"; }

  SearchOptions search(std::optional<std::size_t> doc_dmax = std::nullopt) const {
    SearchOptions s;
    s.dmax = dmax.value_or(doc_dmax.value_or(s.dmax));
    s.work_cap = work_cap;
    s.seed = seed;
    s.on_cap = on_cap == "reject" ? CapPolicy::reject : CapPolicy::sample;
    return s;
  }
};

void add_search_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--dmax", o.dmax, "degree bound for polynomial searches (default 2, or options.dmax in the ring file)");
  cmd->add_option("--work-cap", o.work_cap, "maximum tuples examined before sampling or rejecting")->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for sampled searches and corpus shuffling")->capture_default_str();
  cmd->add_option("--on-cap", o.on_cap, "what to do past the work cap")
      ->check(CLI::IsMember({"sample", "reject"}))
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  cmd->add_flag("--timing", o.timing, "include wall-clock times (machine reports are otherwise byte-stable)");
}

void add_target_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--fixture", o.fixture, "use a bundled example fixture as the ring spec");
  cmd->add_option("--fixtures-dir", o.fixtures_dir, "fixture directory")->capture_default_str();
}

/// Resolves the ring spec: --fixture, a path, or a bare fixture name.
SpecDocument load_target(const CommonOptions& o, const std::optional<std::string>& target) {
  if (o.fixture) {
    if (target) throw UnsupportedSpec("give either a ring spec path or --fixture, not both");
    return load_fixture(*o.fixture, o.fixtures_dir);
  }
  if (!target) throw UnsupportedSpec("no ring spec given (pass a path or --fixture <name>)");
  if (std::filesystem::exists(*target)) return load_spec_file(*target);
  const auto names = fixture_names(o.fixtures_dir);
  if (std::find(names.begin(), names.end(), *target) != names.end()) return load_fixture(*target, o.fixtures_dir);
  throw ParseError("cannot open ring spec '" + *target + "' (not a file or a fixture name)");
}

const Instance<FiniteRing>& finite_instance(const AnyInstance& inst) {
  if (const auto* f = std::get_if<Instance<FiniteRing>>(&inst)) return *f;
  throw NotEnumerable(label_of(inst) + " is not a finite ring; this command needs enumeration");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_check(const CommonOptions& o, const std::vector<std::string>& args, const std::optional<std::string>& sigma,
              const std::optional<std::string>& delta) {
  std::optional<std::string> target;
  std::string property;
  if (args.size() == 2 && !o.fixture) {
    target = args[0];
    property = args[1];
  } else if (args.size() == 1) {
    property = args[0];
  } else {
    throw UnsupportedSpec("usage: check <ring-spec> <property> or check --fixture <name> <property>");
  }
  const SpecDocument doc = load_target(o, target);
  const AnyInstance inst = build_instance(doc, sigma, delta);
  const SearchOptions opt = o.search(doc.dmax);
  const Verdict v = run_property(inst, property, opt);
  const bool replayed = replay(inst, v);
  if (o.machine()) {
    Json j;
    j["schema"] = kVerdictSchema;
    j["instance"] = label_of(inst);
    j["verdict"] = to_json(v, o.timing);
    j["witness_replays"] = replayed;
    print_json(j);
  } else {
    std::cout << label_of(inst) << "\n" << format_line(v) << "\n";
    if (v.fails()) std::cout << (replayed ? "witness replays" : "WITNESS DOES NOT REPLAY") << "\n";
    if (o.timing) std::cout << "elapsed " << std::chrono::duration<double, std::milli>(v.elapsed).count() << " ms\n";
  }
  if (!replayed) return kError;
  return v.fails() ? kFails : kHolds;
}

int cmd_verify(const CommonOptions& o, HarnessOptions h) {
  h.search = o.search();
  h.stream.seed = o.seed;
  const RunReport r = verify_paper(h, o.fixtures_dir);
  if (o.machine()) {
    print_json(to_json(r, h, o.timing));
  } else {
    std::cout << format_report(r, o.timing);
  }
  return r.passed() ? kHolds : kFails;
}

std::string generator_note(const FiniteRing& ring, ElementSet s) {
  const auto e = idempotent_generator(ring, s);
  return e ? "= " + ring.repr(*e) + "R" : "not idempotent-generated";
}

int cmd_annihilators(const CommonOptions& o, const std::optional<std::string>& target) {
  const SpecDocument doc = load_target(o, target);
  const AnyInstance any = build_instance(doc);
  const auto& inst = finite_instance(any);
  const FiniteRing& ring = inst.ring();
  const auto closure = subset_annihilators(ring);
  const std::vector<Verdict> verdicts{is_baer(ring), is_quasi_baer(ring), is_pq_baer(ring)};
  ElementSet idem;
  for (Elem e : enumerate_idempotents(ring)) idem.insert(e);

  if (o.machine()) {
    auto entry = [&](const std::string& of, ElementSet s) {
      const auto e = idempotent_generator(ring, s);
      return Json{{"of", of}, {"annihilator", format_set(ring, s)},
                  {"idempotent_generator", e ? Json(ring.repr(*e)) : Json(nullptr)}};
    };
    Json j;
    j["schema"] = kAnnihilatorSchema;
    j["ring"] = ring.name();
    j["order"] = ring.order();
    j["idempotents"] = format_set(ring, idem);
    for (Elem a = 0; a < ring.order(); ++a) {
      j["element_annihilators"].push_back(entry(format_set(ring, ElementSet::of({a})), right_annihilator(ring, a)));
      j["principal_ideal_annihilators"].push_back(
          entry(format_set(ring, ElementSet::of({a})) + "R", right_annihilator_of_principal(ring, a)));
    }
    for (const auto& s : closure.sets) j["intersection_closure"].push_back(entry(s.generator, s.members));
    for (const auto& v : verdicts) j["verdicts"].push_back(to_json(v, o.timing));
    print_json(j);
    return kHolds;
  }
  std::cout << "ring " << ring.name() << " (" << ring.order() << " elements)\n";
  std::cout << "idempotents: " << format_set(ring, idem) << "\n";
  std::cout << "element annihilators:\n";
  for (Elem a = 0; a < ring.order(); ++a) {
    const ElementSet s = right_annihilator(ring, a);
    std::cout << "  r({" << ring.repr(a) << "}) = " << format_set(ring, s) << "  " << generator_note(ring, s) << "\n";
  }
  std::cout << "principal right ideal annihilators:\n";
  for (Elem a = 0; a < ring.order(); ++a) {
    const ElementSet s = right_annihilator_of_principal(ring, a);
    std::cout << "  r(" << ring.repr(a) << "R) = " << format_set(ring, s) << "  " << generator_note(ring, s) << "\n";
  }
  std::cout << "all right annihilators (intersection closure):\n";
  for (const auto& s : closure.sets) {
    std::cout << "  r(" << s.generator << ") = " << format_set(ring, s.members) << "  "
              << generator_note(ring, s.members) << "\n";
  }
  for (const auto& v : verdicts) std::cout << format_line(v) << "\n";
  return kHolds;
}

int cmd_idempotents(const CommonOptions& o, const std::optional<std::string>& target) {
  const SpecDocument doc = load_target(o, target);
  const AnyInstance any = build_instance(doc);
  const auto& inst = finite_instance(any);
  const FiniteRing& ring = inst.ring();
  const auto& sigma = inst.sigma();
  auto central = [&](Elem e) {
    for (Elem r = 0; r < ring.order(); ++r) {
      if (ring.mul(e, r) != ring.mul(r, e)) return false;
    }
    return true;
  };
  const Verdict abelian = is_abelian(ring);
  if (o.machine()) {
    Json j;
    j["schema"] = kIdempotentSchema;
    j["ring"] = ring.name();
    j["instance"] = inst.label();
    j["idempotents"] = Json::array();
    for (Elem e : enumerate_idempotents(ring)) {
      j["idempotents"].push_back({{"e", ring.repr(e)},
                                  {"central", central(e)},
                                  {"sigma_fixes", sigma(e) == e},
                                  {"delta_kills", inst.delta(e) == 0}});
    }
    j["abelian"] = to_json(abelian, o.timing);
    print_json(j);
    return kHolds;
  }
  std::cout << inst.label() << "\n";
  for (Elem e : enumerate_idempotents(ring)) {
    std::cout << "  " << ring.repr(e) << (central(e) ? "  central" : "  not central")
              << (sigma(e) == e ? "  sigma(e)=e" : "  sigma(e)=" + ring.repr(sigma(e)))
              << (inst.delta(e) == 0 ? "  delta(e)=0" : "  delta(e)=" + ring.repr(inst.delta(e))) << "\n";
  }
  std::cout << format_line(abelian) << "\n";
  return kHolds;
}

int cmd_search(const CommonOptions& o, const std::optional<std::string>& target, std::vector<std::string> properties,
               const InstanceStream& stream) {
  if (properties.empty()) {
    for (const auto& p : property_names()) {
      if (is_bounded_property(p)) properties.push_back(p);
    }
  }
  struct Row {
    std::string label;
    Verdict verdict;
    bool replayed;
  };
  std::vector<Row> rows;
  auto run = [&](const AnyInstance& inst, const SearchOptions& opt) {
    for (const auto& p : properties) {
      Verdict v = run_property(inst, p, opt);
      const bool ok = replay(inst, v);
      rows.push_back({label_of(inst), std::move(v), ok});
    }
  };
  if (target || o.fixture) {
    const SpecDocument doc = load_target(o, target);
    run(build_instance(doc), o.search(doc.dmax));
  } else {
    for (const auto& ci : generate_instances(stream)) run(AnyInstance{ci.instance}, o.search());
  }
  bool any_fail = false, any_bad_replay = false;
  for (const auto& r : rows) {
    any_fail = any_fail || r.verdict.fails();
    any_bad_replay = any_bad_replay || !r.replayed;
  }
  if (o.machine()) {
    Json j;
    j["schema"] = kSearchSchema;
    j["results"] = Json::array();
    for (const auto& r : rows) {
      j["results"].push_back({{"instance", r.label}, {"verdict", to_json(r.verdict, o.timing)}, {"witness_replays", r.replayed}});
    }
    print_json(j);
  } else {
    for (const auto& r : rows) {
      std::cout << r.label << "  " << format_line(r.verdict) << (r.replayed ? "" : "  WITNESS DOES NOT REPLAY") << "\n";
    }
  }
  if (any_bad_replay) return kError;
  return any_fail ? kFails : kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide ring-theoretic properties of Ore extensions R[x; sigma, delta] over small rings."};
  app.require_subcommand(1);
  CommonOptions o;

  auto* check = app.add_subcommand("check", "decide one property of a ring spec");
  std::vector<std::string> check_args;
  std::optional<std::string> sigma, delta;
  check->add_option("args", check_args, "[ring-spec] property")->required();
  check->add_option("--sigma", sigma, "morphism name from the ring file");
  check->add_option("--delta", delta, "derivation name from the ring file");
  add_target_flags(check, o);
  add_search_flags(check, o);
  add_output_flags(check, o);

  auto* verify = app.add_subcommand("verify-paper", "run every fixture and every theorem check over the corpus");
  HarnessOptions h;
  verify->add_option("--triple-work-cap", h.triple_work_cap, "work cap for triple searches")->capture_default_str();
  verify->add_option("--check", h.only, "run only these theorem checks");
  verify->add_option("--rings", h.stream.rings, "restrict the corpus to these catalogue rings");
  verify->add_flag("--shuffle", h.stream.shuffle, "permute the corpus order by the seed");
  verify->add_option("--jobs", h.jobs, "worker threads over corpus instances")->capture_default_str();
  verify->add_option("--fixtures-dir", o.fixtures_dir, "fixture directory")->capture_default_str();
  add_search_flags(verify, o);
  add_output_flags(verify, o);
  verify->callback([&] {
    if (!o.dmax) o.dmax = 2;
  });

  std::optional<std::string> target;
  auto* ann = app.add_subcommand("annihilators", "list right annihilators and the Baer-family verdicts");
  ann->add_option("spec", target, "ring spec path or fixture name");
  add_target_flags(ann, o);
  add_output_flags(ann, o);

  auto* idem = app.add_subcommand("idempotents", "list idempotents with centrality and sigma/delta action");
  idem->add_option("spec", target, "ring spec path or fixture name");
  add_target_flags(idem, o);
  add_output_flags(idem, o);

  auto* search = app.add_subcommand("search", "run bounded polynomial searches on a spec or over the corpus");
  std::vector<std::string> properties;
  InstanceStream stream;
  search->add_option("spec", target, "ring spec path or fixture name (default: the generated corpus)");
  search->add_option("--property", properties, "properties to search (default: every bounded property)");
  search->add_option("--rings", stream.rings, "restrict the corpus to these catalogue rings");
  add_target_flags(search, o);
  add_search_flags(search, o);
  add_output_flags(search, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kError;
  }

  try {
    if (*check) return cmd_check(o, check_args, sigma, delta);
    if (*verify) return cmd_verify(o, h);
    if (*ann) return cmd_annihilators(o, target);
    if (*idem) return cmd_idempotents(o, target);
    if (*search) return cmd_search(o, target, properties, stream);
  } catch (const orelab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
