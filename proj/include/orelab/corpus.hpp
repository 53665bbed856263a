#pragma once

// Example fixtures stored as ring-spec documents, and the generated corpus of
// small (ring, σ, δ) instances the theorem harness runs over.

#include <algorithm>
#include <filesystem>
#include <limits>
#include <numeric>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orelab/properties.hpp"
#include "orelab/replay.hpp"
#include "orelab/spec_io.hpp"

#ifndef ORELAB_FIXTURES_DIR
#define ORELAB_FIXTURES_DIR "fixtures"
#endif

namespace orelab {

// ---------------------------------------------------------------------------
// Fixtures.

using Fixture = SpecDocument;

inline std::filesystem::path default_fixtures_dir() { return ORELAB_FIXTURES_DIR; }

inline std::vector<std::string> fixture_names(const std::filesystem::path& dir = default_fixtures_dir()) {
  std::vector<std::string> names;
  if (!std::filesystem::is_directory(dir)) throw UnknownFixture("fixture directory '" + dir.string() + "' not found");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

inline Fixture load_fixture(const std::string& name, const std::filesystem::path& dir = default_fixtures_dir()) {
  const auto path = dir / (name + ".json");
  if (!std::filesystem::exists(path)) throw UnknownFixture("no fixture named '" + name + "' in " + dir.string());
  Fixture f = load_spec_file(path);
  if (f.name != name) throw UnsupportedSpec(path.string() + ": name field '" + f.name + "' differs from the file name");
  return f;
}

inline std::vector<Fixture> all_fixtures(const std::filesystem::path& dir = default_fixtures_dir()) {
  std::vector<Fixture> out;
  for (const auto& n : fixture_names(dir)) out.push_back(load_fixture(n, dir));
  return out;
}

/// The outcome of one expected verdict.
struct ExpectationOutcome {
  Expectation expected;
  std::optional<Verdict> actual;
  std::string instance;
  bool ok = false;
  std::vector<std::string> problems;
};

struct FixtureOutcome {
  std::string fixture;
  std::vector<ExpectationOutcome> expectations;
  bool ok() const {
    return std::all_of(expectations.begin(), expectations.end(), [](const auto& e) { return e.ok; });
  }
};

/// Runs every expectation of a fixture. A status must match exactly; a
/// documented witness must replay as a genuine violation; the decider's own
/// witness must replay too and, with exact_witness, equal the documented one.
inline FixtureOutcome check_fixture(const Fixture& f, const SearchOptions& base = {}) {
  FixtureOutcome out{f.name, {}};
  for (const auto& x : f.expected) {
    ExpectationOutcome o;
    o.expected = x;
    try {
      const AnyInstance inst = build_instance(f, x.sigma, x.delta);
      o.instance = label_of(inst);
      SearchOptions opt = base;
      opt.dmax = x.dmax.value_or(f.dmax.value_or(base.dmax));
      const Verdict v = run_property(inst, x.property, opt);
      o.actual = v;
      if (v.status != x.status) {
        o.problems.push_back(std::string("status ") + to_string(v.status) + ", expected " + to_string(x.status));
      }
      if (x.witness && !replay_witness(inst, x.property, *x.witness, opt.dmax)) {
        o.problems.push_back("documented witness {" + x.witness->str() + "} does not replay");
      }
      if (v.fails() && !replay(inst, v)) o.problems.push_back("decider witness {" + v.witness->str() + "} does not replay");
      if (x.exact_witness && x.witness && (!v.witness || !(*v.witness == *x.witness))) {
        o.problems.push_back("decider witness {" + (v.witness ? v.witness->str() : std::string("none")) +
                             "} differs from {" + x.witness->str() + "}");
      }
    } catch (const Error& e) {
      o.problems.push_back(std::string("error: ") + e.what());
    }
    o.ok = o.problems.empty();
    out.expectations.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Endomorphisms.

/// Elements reachable from `gens` (and 1) by sums and products.
inline ElementSet generated_subring(const FiniteRing& ring, const std::vector<Elem>& gens) {
  std::vector<Elem> members{0, ring.one()};
  ElementSet seen = ElementSet::of({0, ring.one()});
  for (Elem g : gens) {
    if (!seen.contains(g)) {
      seen.insert(g);
      members.push_back(g);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = members[i], b = members[j];
      for (Elem c : {ring.add(a, b), ring.mul(a, b), ring.mul(b, a)}) {
        if (!seen.contains(c)) {
          seen.insert(c);
          members.push_back(c);
        }
      }
    }
  }
  return seen;
}

/// A small generating set, chosen greedily in carrier order.
inline std::vector<Elem> generating_set(const FiniteRing& ring) {
  std::vector<Elem> gens;
  ElementSet span = generated_subring(ring, gens);
  for (Elem a = 0; a < ring.order() && span.size() < ring.order(); ++a) {
    if (span.contains(a)) continue;
    gens.push_back(a);
    span = generated_subring(ring, gens);
  }
  return gens;
}

/// Upper bound on candidate generator images tried.
inline constexpr std::size_t kMaxEndomorphismCandidates = 1u << 20;

namespace detail {

/// Extends generator images to a full map by closing under + and ·; nullopt
/// on a conflict or when the map is not total.
inline std::optional<std::vector<Elem>> extend_map(const FiniteRing& ring, const std::vector<Elem>& gens,
                                                   const std::vector<Elem>& images) {
  constexpr Elem unset = std::numeric_limits<Elem>::max();
  std::vector<Elem> map(ring.order(), unset);
  std::vector<Elem> known;
  auto assign = [&](Elem x, Elem y) {
    if (map[x] == unset) {
      map[x] = y;
      known.push_back(x);
      return true;
    }
    return map[x] == y;
  };
  if (!assign(0, 0) || !assign(ring.one(), ring.one())) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!assign(gens[i], images[i])) return std::nullopt;
  }
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = known[i], b = known[j];
      if (!assign(ring.add(a, b), ring.add(map[a], map[b]))) return std::nullopt;
      if (!assign(ring.mul(a, b), ring.mul(map[a], map[b]))) return std::nullopt;
      if (!assign(ring.mul(b, a), ring.mul(map[b], map[a]))) return std::nullopt;
    }
  }
  if (known.size() != ring.order()) return std::nullopt;
  return map;
}

inline std::string describe_map(const FiniteRing& ring, const std::vector<Elem>& gens, const std::vector<Elem>& map) {
  bool identity = true;
  for (Elem a = 0; a < ring.order(); ++a) identity = identity && map[a] == a;
  if (identity) return "identity";
  std::string s = "map(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    s += (i ? "; " : "") + ring.repr(gens[i]) + "->" + ring.repr(map[gens[i]]);
  }
  return s + ")";
}

}  // namespace detail

/// Every unital endomorphism, identity first, then by image table. Each map
/// is determined by the images of a generating set and passes full validation.
inline std::vector<Endomorphism<FiniteRing>> enumerate_endomorphisms(const std::shared_ptr<const FiniteRing>& ring) {
  const auto gens = generating_set(*ring);
  const std::size_t n = ring->order();
  if (detail::saturating_pow(n, gens.size()) > kMaxEndomorphismCandidates) {
    throw WorkCapExceeded("too many candidate endomorphisms for " + ring->name());
  }
  std::set<std::vector<Elem>> tables;
  std::vector<Elem> images(gens.size(), 0);
  for (;;) {
    if (auto map = detail::extend_map(*ring, gens, images)) tables.insert(*map);
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == n) images[k++] = 0;
    if (k == images.size()) break;
  }
  std::vector<Endomorphism<FiniteRing>> out;
  std::vector<Elem> identity(n);
  std::iota(identity.begin(), identity.end(), Elem{0});
  auto add = [&](const std::vector<Elem>& t) {
    try {
      out.push_back(morphisms::from_table(ring, t, detail::describe_map(*ring, gens, t)));
    } catch (const NotAHomomorphism&) {
    }
  };
  if (tables.count(identity)) add(identity);
  for (const auto& t : tables) {
    if (t != identity) add(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalogue and instance stream.

struct CatalogueEntry {
  std::string name;
  std::shared_ptr<const FiniteRing> ring;
};

/// The built-in rings: both sides of every property are represented.
inline std::vector<CatalogueEntry> catalogue() {
  using namespace rings;
  const auto z2 = zmod(2), z4 = zmod(4);
  return {
      {"Z2", z2},
      {"Z3", zmod(3)},
      {"Z4", z4},
      {"Z2+Z2", direct_product({z2, z2})},
      {"Z2+Z2+Z2", direct_product({z2, z2, z2})},
      {"UT2(Z2)", upper_triangular2(z2)},
      {"T(Z4,Z4)", triangular2(z4, z4, canonical_action(*z4, *z4))},
      {"GF4", zp_quotient(2, {1, 1, 1})},
      {"Z2[t]/(t^2)", zp_quotient(2, {0, 0, 1})},
  };
}

/// Zero plus the distinct nonzero inner σ-derivations, in carrier order of c.
inline std::vector<Derivation<FiniteRing>> corpus_derivations(const Endomorphism<FiniteRing>& sigma,
                                                              std::size_t max_inner = SIZE_MAX) {
  std::vector<Derivation<FiniteRing>> out{derivations::zero(sigma)};
  std::set<std::vector<Elem>> seen{std::vector<Elem>(sigma.ring().order(), 0)};
  for (Elem c = 0; c < sigma.ring().order() && out.size() <= max_inner; ++c) {
    auto d = derivations::inner(sigma, c);
    if (seen.insert(tabulate(sigma.ring(), d)).second) out.push_back(std::move(d));
  }
  return out;
}

struct InstanceStream {
  std::uint64_t seed = 20240601;
  std::vector<std::string> rings;         // catalogue names to include; empty means all
  std::size_t max_inner = SIZE_MAX;       // inner derivations per (ring, σ)
  bool shuffle = false;                   // permute instance order by seed
};

struct CorpusInstance {
  std::size_t index;
  std::string ring_name;
  Instance<FiniteRing> instance;
};

/// The deterministic (ring, σ, δ) sequence: catalogue rings × unital
/// endomorphisms × {zero, inner} derivations.
inline std::vector<CorpusInstance> generate_instances(const InstanceStream& stream = {}) {
  std::vector<CorpusInstance> out;
  for (const auto& entry : catalogue()) {
    if (!stream.rings.empty() &&
        std::find(stream.rings.begin(), stream.rings.end(), entry.name) == stream.rings.end()) {
      continue;
    }
    for (const auto& sigma : enumerate_endomorphisms(entry.ring)) {
      for (auto& delta : corpus_derivations(sigma, stream.max_inner)) {
        out.push_back({0, entry.name, Instance<FiniteRing>{entry.name, std::move(delta)}});
      }
    }
  }
  if (stream.shuffle) {
    std::mt19937_64 rng(stream.seed);
    std::shuffle(out.begin(), out.end(), rng);
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

}  // namespace orelab
