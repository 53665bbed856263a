#pragma once

// Witness replay: re-evaluates a failing verdict's witness straight from the
// definitions, using only public ring, morphism and polynomial operations. It
// shares no code path with the deciders' search loops.

#include <string>
#include <vector>

#include "orelab/annihilator.hpp"
#include "orelab/properties.hpp"

namespace orelab {

namespace detail {

inline std::size_t parse_index(const Witness& w, const std::string& role) {
  const std::string& s = w.get(role);
  try {
    return static_cast<std::size_t>(std::stoul(s));
  } catch (const std::exception&) {
    throw ParseError("witness entry " + role + "='" + s + "' is not an index");
  }
}

template <Ring R>
bool nilpotent(const R& r, typename R::element a) {
  auto p = a;
  for (int k = 0; k < 64; ++k) {
    if (r.is_zero(p)) return true;
    p = r.mul(p, a);
  }
  return r.is_zero(p);
}

template <Ring R>
bool zero_poly(const SkewPolynomial<R>& p) {
  return p.degree() == Degree::neg_infinity();
}

/// {c : d·c = 0 for all d in X}, or with `ideal`, {c : d·r·c = 0 for all d, r}.
inline ElementSet annihilator_by_definition(const FiniteRing& ring, const std::vector<Elem>& x, bool ideal) {
  ElementSet out;
  for (Elem c = 0; c < ring.order(); ++c) {
    bool kills = true;
    for (Elem d : x) {
      if (ideal) {
        for (Elem r = 0; r < ring.order() && kills; ++r) kills = ring.mul(ring.mul(d, r), c) == 0;
      } else {
        kills = kills && ring.mul(d, c) == 0;
      }
    }
    if (kills) out.insert(c);
  }
  return out;
}

inline bool idempotent_generated(const FiniteRing& ring, ElementSet s) {
  for (Elem e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) != e) continue;
    ElementSet eR;
    for (Elem r = 0; r < ring.order(); ++r) eR.insert(ring.mul(e, r));
    if (eR == s) return true;
  }
  return false;
}

inline bool replay_baer(const FiniteRing& ring, const std::string& property, const Witness& w) {
  std::string gen = detail::strip_spaces(w.get("generated-by"));
  const bool ideal = property != "baer";
  if (ideal) {
    if (gen.empty() || gen.back() != 'R') throw ParseError("expected a generator of the form {..}R, got '" + gen + "'");
    gen.pop_back();
  }
  const ElementSet x = parse_set(ring, gen);
  const ElementSet ann = annihilator_by_definition(ring, x.members(), ideal);
  if (w.has("annihilator") && parse_set(ring, w.get("annihilator")) != ann) return false;
  return !idempotent_generated(ring, ann);
}

inline bool replay_transfer(const Instance<FiniteRing>& inst, BaerKind kind, const Witness& w, std::size_t dmax) {
  const FiniteRing& ring = inst.ring();
  const OreExtension<FiniteRing> ext(inst.delta);
  std::vector<SkewPolynomial<FiniteRing>> gens{ext.parse(w.get("p1"))};
  if (w.has("p2")) gens.push_back(ext.parse(w.get("p2")));
  const bool ideal = kind != BaerKind::baer;

  // A* and r_R(A*).
  std::vector<Elem> coeffs;
  for (const auto& p : gens) {
    if (!ideal) {
      coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
      continue;
    }
    for (Elem r = 0; r < ring.order(); ++r) {
      const auto pr = ext.mul(p, ext.constant(r));
      coeffs.insert(coeffs.end(), pr.coeffs().begin(), pr.coeffs().end());
    }
  }
  const ElementSet ann = annihilator_by_definition(ring, coeffs, ideal);
  if (w.get("e") == "none") return !idempotent_generated(ring, ann);

  const Elem e = ring.parse(w.get("e"));
  ElementSet eR;
  for (Elem r = 0; r < ring.order(); ++r) eR.insert(ring.mul(e, r));
  if (ring.mul(e, e) != e || eR != ann) return false;

  const auto q = ext.parse(w.get("q"));
  if (q.degree() != Degree::neg_infinity() && q.degree() > Degree(dmax)) return false;
  bool in_eR = true;
  for (Elem c : q.coeffs()) in_eR = in_eR && eR.contains(c);
  bool kills = true;
  for (const auto& p : gens) {
    if (!ideal) {
      kills = kills && zero_poly(ext.mul(p, q));
      continue;
    }
    for (Elem r = 0; r < ring.order() && kills; ++r) {
      for (std::size_t k = 0; k <= dmax && kills; ++k) {
        kills = zero_poly(ext.mul(ext.mul(p, ext.monomial(r, k)), q));
      }
    }
  }
  return in_eR != kills;
}

}  // namespace detail

/// True when the witness genuinely violates the property on this instance.
/// Throws ParseError when the witness is malformed.
template <Ring R>
bool replay_witness(const Instance<R>& inst, const std::string& property, const Witness& w, std::size_t dmax = 2) {
  const R& r = inst.ring();
  const auto& sigma = inst.sigma();
  const auto& delta = inst.delta;
  auto el = [&](const char* role) { return r.parse(w.get(role)); };
  auto z = [&](const auto& x) { return r.is_zero(x); };
  auto m = [&](const auto& x, const auto& y) { return r.mul(x, y); };

  if (property == "reversible") {
    const auto a = el("a"), b = el("b");
    return z(m(a, b)) && !z(m(b, a));
  }
  if (property == "symmetric") {
    const auto a = el("a"), b = el("b"), c = el("c");
    return z(m(m(a, b), c)) && !z(m(m(a, c), b));
  }
  if (property == "reduced") {
    const auto a = el("a");
    return !z(a) && detail::nilpotent(r, a);
  }
  if (property == "abelian") {
    const auto e = el("e"), x = el("r");
    return r.equal(m(e, e), e) && !r.equal(m(e, x), m(x, e));
  }
  const bool right_rev = property == "right-sigma-reversible" || property == "sigma-reversible";
  const bool left_rev = property == "left-sigma-reversible" || property == "sigma-reversible";
  if (right_rev || left_rev) {
    const auto a = el("a"), b = el("b");
    if (!z(m(a, b))) return false;
    return (right_rev && !z(m(b, sigma(a)))) || (left_rev && !z(m(sigma(b), a)));
  }
  const bool right_sym = property == "right-sigma-symmetric" || property == "sigma-symmetric";
  const bool left_sym = property == "left-sigma-symmetric" || property == "sigma-symmetric";
  if (right_sym || left_sym) {
    const auto a = el("a"), b = el("b"), c = el("c");
    if (!z(m(m(a, b), c))) return false;
    return (right_sym && !z(m(m(a, c), sigma(b)))) || (left_sym && !z(m(sigma(b), m(a, c))));
  }
  if (property == "condition-c-sigma") {
    const auto a = el("a"), b = el("b");
    return z(m(a, sigma(b))) && !z(m(a, b));
  }
  if (property == "sigma-rigid") {
    const auto a = el("a");
    return !z(a) && z(m(a, sigma(a)));
  }
  const bool sc = property == "sigma-compatible" || property == "compatible";
  const bool dc = property == "delta-compatible" || property == "compatible";
  if (sc || dc) {
    const auto a = el("a"), b = el("b");
    return (sc && z(m(a, sigma(b))) != z(m(a, b))) || (dc && z(m(a, b)) && !z(m(a, delta(b))));
  }
  if (property == "sigma-unital") return !r.equal(sigma(r.one()), r.one());
  if (property == "power-annihilation") {
    const auto a = el("a"), b = el("b");
    const std::size_t n = detail::parse_index(w, "n");
    const auto image = w.get("map") == "sigma" ? sigma.power(n, a) : delta.power(n, a);
    return n >= 1 && z(m(a, b)) && !z(m(image, b));
  }
  if (property == "word-annihilation") {
    const auto a = el("a"), b = el("b");
    const std::size_t i = detail::parse_index(w, "i"), j = detail::parse_index(w, "j");
    const OreExtension<R> ext(delta);
    return i <= j && z(m(a, b)) && !z(m(a, ext.word_map_apply(j, i, b)));
  }
  if (property == "idempotents-fixed") {
    const auto e = el("e");
    return r.equal(m(e, e), e) && (!r.equal(sigma(e), e) || !z(delta(e)));
  }
  if (auto variant = armendariz_variant(property)) {
    const OreExtension<R> ext = variant_extension(delta, *variant);
    const auto f = ext.parse(w.get("f")), g = ext.parse(w.get("g"));
    if (!detail::zero_poly(ext.mul(f, g))) return false;
    const std::size_t i = detail::parse_index(w, "i"), j = detail::parse_index(w, "j");
    const auto ai = f.coefficient(i), bj = g.coefficient(j);
    switch (*variant) {
      case ArmendarizVariant::sigma_skew: return !z(m(ai, sigma.power(i, bj)));
      case ArmendarizVariant::sigma_delta_skew:
        return !detail::zero_poly(ext.mul(ext.monomial(ai, i), ext.monomial(bj, j)));
      case ArmendarizVariant::skew: return i == 0 && !z(m(ai, bj));
      default: return !z(m(ai, bj));
    }
  }
  if (property == "poly-reversible") {
    const OreExtension<R> ext(delta);
    const auto f = ext.parse(w.get("f")), g = ext.parse(w.get("g"));
    return detail::zero_poly(ext.mul(f, g)) && !detail::zero_poly(ext.mul(g, f));
  }
  if (property == "poly-symmetric" || property == "triple-coefficient-annihilation") {
    const OreExtension<R> ext(delta);
    const auto f = ext.parse(w.get("f")), g = ext.parse(w.get("g")), h = ext.parse(w.get("h"));
    if (!detail::zero_poly(ext.mul(ext.mul(f, g), h))) return false;
    if (property == "poly-symmetric") return !detail::zero_poly(ext.mul(ext.mul(f, h), g));
    const std::size_t i = detail::parse_index(w, "i"), j = detail::parse_index(w, "j"), k = detail::parse_index(w, "k");
    return !z(m(m(f.coefficient(i), g.coefficient(j)), h.coefficient(k)));
  }
  if constexpr (std::is_same_v<R, FiniteRing>) {
    if (property == "baer" || property == "quasi-baer" || property == "pq-baer") {
      return detail::replay_baer(r, property, w);
    }
    if (auto kind = transfer_kind(property)) return detail::replay_transfer(inst, *kind, w, dmax);
  }
  throw UnsupportedSpec("no replay rule for property '" + property + "' on " + r.name());
}

/// Replays a failing verdict; verdicts that do not fail have nothing to replay.
template <Ring R>
bool replay(const Instance<R>& inst, const Verdict& v) {
  if (!v.fails()) return true;
  if (!v.witness) return false;
  return replay_witness(inst, v.property, *v.witness, v.bounds.dmax.value_or(2));
}

inline bool replay(const AnyInstance& inst, const Verdict& v) {
  return std::visit([&](const auto& i) { return replay(i, v); }, inst);
}

inline bool replay_witness(const AnyInstance& inst, const std::string& property, const Witness& w,
                           std::size_t dmax = 2) {
  return std::visit([&](const auto& i) { return replay_witness(i, property, w, dmax); }, inst);
}

}  // namespace orelab
