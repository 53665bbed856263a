#pragma once

// Ring-spec documents: JSON describing a ring, named endomorphisms and
// σ-derivations, optional search options and expected verdicts. The schema is
// documented in README.md. Errors carry the JSON pointer of the offending
// field.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orelab/properties.hpp"

namespace orelab {

using Json = nlohmann::json;

struct Expectation {
  std::string property;
  Status status = Status::holds;
  std::optional<std::string> sigma;  // morphism name, defaults to the instance's
  std::optional<std::string> delta;  // derivation name
  std::optional<std::size_t> dmax;
  std::optional<Witness> witness;    // a known violation, replayed on load
  bool exact_witness = false;        // the decider must report this witness verbatim
  std::string note;
};

struct SpecDocument {
  std::string name;
  std::string description;
  Json ring;
  Json morphisms = Json::array();
  Json derivations = Json::array();
  std::optional<std::size_t> dmax;
  std::vector<Expectation> expected;
  std::string source;  // file path or "<inline>"
};

namespace spec_detail {

inline std::string normalize_kind(std::string s) {
  for (char& c : s) {
    if (c == '_') c = '-';
  }
  return s;
}

class Cursor {
 public:
  Cursor(const Json& j, std::string path, std::string source) : j_(j), path_(std::move(path)), source_(std::move(source)) {}

  const Json& json() const noexcept { return j_; }
  const std::string& path() const noexcept { return path_; }

  std::string located_message(const std::string& what) const {
    return source_ + " at " + (path_.empty() ? "/" : path_) + ": " + what;
  }
  [[noreturn]] void fail(const std::string& what) const { throw UnsupportedSpec(located_message(what)); }
  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }
  Cursor at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail(std::string("missing field '") + key + "'");
    return Cursor(j_.at(key), path_ + "/" + key, source_);
  }
  Cursor at(std::size_t i) const {
    if (!j_.is_array() || i >= j_.size()) fail("index " + std::to_string(i) + " out of range");
    return Cursor(j_.at(i), path_ + "/" + std::to_string(i), source_);
  }
  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  long long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long long>();
  }
  std::size_t natural() const {
    const long long v = integer();
    if (v < 0) fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  /// `params` object or an empty one.
  Cursor params() const {
    if (has("params")) return at("params");
    static const Json empty = Json::object();
    return Cursor(empty, path_ + "/params", source_);
  }

 private:
  const Json& j_;
  std::string path_;
  std::string source_;
};

inline std::shared_ptr<const FiniteRing> build_finite(const Cursor& c) {
  const std::string kind = normalize_kind(c.at("kind").str());
  const Cursor p = c.params();
  const std::size_t cap = c.has("order_cap") ? c.at("order_cap").natural() : kDefaultOrderCap;
  try {
    if (kind == "zmod") return rings::zmod(p.at("n").natural(), cap);
    if (kind == "direct-product") {
      const Cursor fs = p.at("factors");
      std::vector<std::shared_ptr<const FiniteRing>> factors;
      for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(build_finite(fs.at(i)));
      return rings::direct_product(std::move(factors), cap);
    }
    if (kind == "triangular2") {
      auto diag = build_finite(p.at("diag"));
      auto off = build_finite(p.at("offdiag"));
      std::vector<Elem> action;
      if (p.has("action")) {
        const Cursor a = p.at("action");
        for (std::size_t i = 0; i < a.size(); ++i) action.push_back(off->parse(a.at(i).str()));
      } else {
        action = rings::canonical_action(*diag, *off);
      }
      return rings::triangular2(std::move(diag), std::move(off), std::move(action), cap);
    }
    if (kind == "upper-triangular2") return rings::upper_triangular2(build_finite(p.at("base")), cap);
    if (kind == "zp-quotient") {
      const Cursor m = p.at("modulus");
      std::vector<int> modulus;
      for (std::size_t i = 0; i < m.size(); ++i) modulus.push_back(static_cast<int>(m.at(i).integer()));
      return rings::zp_quotient(static_cast<int>(p.at("p").natural()), std::move(modulus), cap);
    }
    if (kind == "tables") {
      const Cursor es = p.at("elements");
      std::vector<std::string> reprs;
      for (std::size_t i = 0; i < es.size(); ++i) reprs.push_back(es.at(i).str());
      auto table = [&](const char* key) {
        const Cursor t = p.at(key);
        if (t.size() != reprs.size()) t.fail("expected " + std::to_string(reprs.size()) + " rows");
        std::vector<Elem> out;
        for (std::size_t i = 0; i < reprs.size(); ++i) {
          const Cursor row = t.at(i);
          if (row.size() != reprs.size()) row.fail("expected " + std::to_string(reprs.size()) + " entries");
          for (std::size_t j = 0; j < reprs.size(); ++j) {
            const std::string v = row.at(j).str();
            const auto it = std::find(reprs.begin(), reprs.end(), v);
            if (it == reprs.end()) row.at(j).fail("unknown element '" + v + "'");
            out.push_back(static_cast<Elem>(it - reprs.begin()));
          }
        }
        return out;
      };
      const std::string name = p.has("name") ? p.at("name").str() : "tables";
      return rings::from_tables(name, reprs, table("add"), table("mul"), cap);
    }
  } catch (const AxiomViolation&) {
    throw;
  } catch (const UnsupportedSpec& e) {
    if (std::string(e.what()).find(" at /") != std::string::npos) throw;
    c.fail(e.what());
  }
  c.at("kind").fail("unknown finite ring kind '" + kind + "'");
}

/// Runs `build`, prefixing unlocated spec and parse errors with the cursor's location.
template <class F>
auto located(const Cursor& c, F&& build) {
  auto prefix = [&](const Error& e) { return c.located_message(e.what()); };
  try {
    return build();
  } catch (const UnsupportedSpec& e) {
    if (std::string(e.what()).find(" at /") != std::string::npos) throw;
    throw UnsupportedSpec(prefix(e));
  } catch (const ParseError& e) {
    if (std::string(e.what()).find(" at /") != std::string::npos) throw;
    throw ParseError(prefix(e));
  }
}

template <Ring R>
Endomorphism<R> build_morphism(const std::shared_ptr<const R>& ring, const Cursor& c) {
  const std::string kind = normalize_kind(c.at("kind").str());
  const Cursor p = c.params();
  if (kind == "identity") return morphisms::identity(ring);
  if constexpr (std::is_same_v<R, FiniteRing>) {
    if (kind == "table") {
      const Cursor im = p.at("images");
      std::vector<Elem> images;
      for (std::size_t i = 0; i < im.size(); ++i) images.push_back(ring->parse(im.at(i).str()));
      return morphisms::from_table(ring, std::move(images), c.has("name") ? c.at("name").str() : "table");
    }
    if (kind == "swap") return morphisms::swap(ring);
    if (kind == "negate-offdiag") return morphisms::negate_offdiag(ring);
    if (kind == "frobenius") return morphisms::frobenius(ring);
  } else if constexpr (std::is_same_v<R, Gf2PolyRing>) {
    if (kind == "eval-at-zero") return morphisms::eval_at_zero(ring);
  } else if constexpr (std::is_same_v<R, IntRatTriangularRing>) {
    if (kind == "halve-offdiag") return morphisms::halve_offdiag(ring);
    if (kind == "negate-offdiag") return morphisms::negate_offdiag(ring);
  }
  c.fail("morphism kind '" + kind + "' is not available on " + ring->name());
}

template <Ring R>
Derivation<R> build_derivation(const Endomorphism<R>& sigma, const Cursor& c) {
  const std::string kind = normalize_kind(c.at("kind").str());
  const Cursor p = c.params();
  const R& ring = sigma.ring();
  if (kind == "zero") return derivations::zero(sigma);
  if (kind == "inner") return derivations::inner(sigma, ring.parse(p.at("c").str()));
  if constexpr (std::is_same_v<R, FiniteRing>) {
    if (kind == "table") {
      const Cursor im = p.at("images");
      std::vector<Elem> images;
      for (std::size_t i = 0; i < im.size(); ++i) images.push_back(ring.parse(im.at(i).str()));
      return derivations::from_table(sigma, std::move(images), c.has("name") ? c.at("name").str() : "table");
    }
  }
  c.fail("derivation kind '" + kind + "' is not available on " + ring.name());
}

inline std::string entry_name(const Cursor& c, const char* fallback) {
  return c.has("name") ? c.at("name").str() : fallback;
}

/// Picks the named entry of a morphism/derivation list, or the first one.
inline std::optional<std::size_t> find_entry(const Cursor& list, const std::optional<std::string>& name,
                                             const char* what) {
  if (list.size() == 0) {
    if (name) list.fail(std::string("no ") + what + " named '" + *name + "'");
    return std::nullopt;
  }
  if (!name) return 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (entry_name(list.at(i), "") == *name) return i;
  }
  list.fail(std::string("no ") + what + " named '" + *name + "'");
}

template <Ring R>
Instance<R> build_instance(const SpecDocument& doc, std::shared_ptr<const R> ring,
                           const std::optional<std::string>& sigma_name,
                           const std::optional<std::string>& delta_name) {
  const Cursor ms(doc.morphisms, "/morphisms", doc.source);
  const Cursor ds(doc.derivations, "/derivations", doc.source);
  std::optional<std::string> wanted_sigma = sigma_name;
  std::optional<std::size_t> di = find_entry(ds, delta_name, "derivation");
  if (di && !wanted_sigma && ds.at(*di).has("sigma")) wanted_sigma = ds.at(*di).at("sigma").str();
  const auto mi = find_entry(ms, wanted_sigma, "morphism");
  const Endomorphism<R> sigma =
      mi ? located(ms.at(*mi), [&] { return build_morphism(ring, ms.at(*mi)); }) : morphisms::identity(ring);
  if (di && ds.at(*di).has("sigma") && mi && ds.at(*di).at("sigma").str() != entry_name(ms.at(*mi), "")) {
    ds.at(*di).fail("derivation is declared over a different morphism");
  }
  Derivation<R> delta =
      di ? located(ds.at(*di), [&] { return build_derivation(sigma, ds.at(*di)); }) : derivations::zero(sigma);
  return Instance<R>{doc.name, std::move(delta)};
}

inline Witness parse_witness(const Cursor& c) {
  if (!c.json().is_object()) c.fail("witness must be an object of role: value strings");
  Witness w;
  for (auto it = c.json().begin(); it != c.json().end(); ++it) {
    if (!it.value().is_string()) c.at(it.key().c_str()).fail("witness values must be strings");
    w.set(it.key(), it.value().get<std::string>());
  }
  return w;
}

}  // namespace spec_detail

inline SpecDocument parse_spec(const Json& j, std::string source = "<inline>") {
  using spec_detail::Cursor;
  const Cursor root(j, "", source);
  SpecDocument doc;
  doc.source = source;
  doc.name = root.has("name") ? root.at("name").str() : std::filesystem::path(source).stem().string();
  if (root.has("description")) doc.description = root.at("description").str();
  doc.ring = root.at("ring").json();
  if (root.has("morphisms")) {
    root.at("morphisms").size();
    doc.morphisms = root.at("morphisms").json();
  }
  if (root.has("derivations")) {
    root.at("derivations").size();
    doc.derivations = root.at("derivations").json();
  }
  if (root.has("options") && root.at("options").has("dmax")) doc.dmax = root.at("options").at("dmax").natural();
  if (root.has("expected")) {
    const Cursor ex = root.at("expected");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const Cursor e = ex.at(i);
      Expectation x;
      x.property = e.at("property").str();
      try {
        x.status = status_from_string(e.at("status").str());
      } catch (const ParseError& err) {
        e.at("status").fail(err.what());
      }
      if (e.has("sigma")) x.sigma = e.at("sigma").str();
      if (e.has("delta")) x.delta = e.at("delta").str();
      if (e.has("dmax")) x.dmax = e.at("dmax").natural();
      if (e.has("witness")) x.witness = spec_detail::parse_witness(e.at("witness"));
      if (e.has("exact_witness")) x.exact_witness = e.at("exact_witness").json().get<bool>();
      if (e.has("note")) x.note = e.at("note").str();
      if (x.status == Status::fails && !x.witness && x.exact_witness) e.fail("exact_witness needs a witness");
      doc.expected.push_back(std::move(x));
    }
  }
  return doc;
}

inline SpecDocument parse_spec_text(const std::string& text, std::string source = "<inline>") {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  return parse_spec(j, std::move(source));
}

inline SpecDocument load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ring spec '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path.string());
}

/// Builds the (ring, σ, δ) instance a document describes. `sigma`/`delta` pick
/// named entries; by default the first derivation and its morphism are used.
inline AnyInstance build_instance(const SpecDocument& doc, const std::optional<std::string>& sigma = std::nullopt,
                                  const std::optional<std::string>& delta = std::nullopt) {
  using spec_detail::Cursor;
  const Cursor ring(doc.ring, "/ring", doc.source);
  const std::string kind = spec_detail::normalize_kind(ring.at("kind").str());
  const Cursor p = ring.params();
  if (kind == "poly-mod2") {
    const std::size_t deg = p.has("sample_degree") ? p.at("sample_degree").natural() : 3;
    if (deg > 12) p.at("sample_degree").fail("sample_degree must be at most 12");
    return spec_detail::build_instance(doc, std::make_shared<const Gf2PolyRing>(deg), sigma, delta);
  }
  if (kind == "int-rat-triangular") {
    const int h = p.has("height") ? static_cast<int>(p.at("height").natural()) : 2;
    const int d = p.has("denominators") ? static_cast<int>(p.at("denominators").natural()) : 2;
    if (h < 1 || h > 6 || d < 1 || d > 6) ring.fail("height and denominators must lie in [1, 6]");
    return spec_detail::build_instance(doc, std::make_shared<const IntRatTriangularRing>(h, d), sigma, delta);
  }
  return spec_detail::build_instance(doc, spec_detail::build_finite(ring), sigma, delta);
}

}  // namespace orelab
