#pragma once

// A (ring, σ, δ) instance and name-based dispatch over every decider, plus the
// consequence checks that the harness asserts as lemma conclusions.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orelab/annihilator.hpp"
#include "orelab/deciders.hpp"
#include "orelab/morphism.hpp"
#include "orelab/ore.hpp"
#include "orelab/poly_search.hpp"
#include "orelab/structured.hpp"

namespace orelab {

template <Ring R>
struct Instance {
  std::string name;
  Derivation<R> delta;  // carries σ and the ring

  const R& ring() const noexcept { return delta.ring(); }
  const Endomorphism<R>& sigma() const noexcept { return delta.sigma(); }
  std::string label() const { return name + " [sigma=" + sigma().name() + ", delta=" + delta.name() + "]"; }
};

using AnyInstance = std::variant<Instance<FiniteRing>, Instance<Gf2PolyRing>, Instance<IntRatTriangularRing>>;

inline std::string label_of(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return i.label(); }, inst);
}

// ---------------------------------------------------------------------------
// Consequence checks.

/// ab = 0 implies σⁿ(a)b = 0 and δⁿ(a)b = 0 for 1 <= n <= nmax.
/// Witness roles: a, b, map, n.
template <Ring R>
Verdict powers_annihilate(const Derivation<R>& delta, std::size_t nmax = 3) {
  return timed([&] {
    const R& r = delta.ring();
    const auto u = universe_of(r);
    std::size_t evaluated = 0;
    for (const auto& a : u.elements) {
      for (const auto& b : u.elements) {
        if (!r.is_zero(r.mul(a, b))) continue;
        auto s = a, d = a;
        for (std::size_t n = 1; n <= nmax; ++n) {
          ++evaluated;
          s = delta.sigma()(s);
          d = delta(d);
          const char* bad = !r.is_zero(r.mul(s, b)) ? "sigma" : !r.is_zero(r.mul(d, b)) ? "delta" : nullptr;
          if (bad) {
            return detail::finish("power-annihilation", u, evaluated,
                                  Witness{{"a", r.repr(a)}, {"b", r.repr(b)}, {"map", bad}, {"n", std::to_string(n)}});
          }
        }
      }
    }
    return detail::finish<R>("power-annihilation", u, evaluated, std::nullopt);
  });
}

/// ab = 0 implies a·f_i^j(b) = 0 for all i <= j <= jmax. Witness roles: a, b, i, j.
template <Ring R>
Verdict word_maps_annihilate(const Derivation<R>& delta, std::size_t jmax = 3) {
  return timed([&] {
    const OreExtension<R> ext(delta);
    const R& r = delta.ring();
    const auto u = universe_of(r);
    std::size_t evaluated = 0;
    for (const auto& b : u.elements) {
      std::vector<SkewPolynomial<R>> expansions;
      for (std::size_t j = 0; j <= jmax; ++j) expansions.push_back(ext.x_power_times(j, b));
      for (const auto& a : u.elements) {
        if (!r.is_zero(r.mul(a, b))) continue;
        for (std::size_t j = 0; j <= jmax; ++j) {
          for (std::size_t i = 0; i <= j; ++i) {
            ++evaluated;
            if (!r.is_zero(r.mul(a, expansions[j].coefficient(i)))) {
              return detail::finish("word-annihilation", u, evaluated,
                                    Witness{{"a", r.repr(a)}, {"b", r.repr(b)}, {"i", std::to_string(i)},
                                            {"j", std::to_string(j)}});
            }
          }
        }
      }
    }
    return detail::finish<R>("word-annihilation", u, evaluated, std::nullopt);
  });
}

/// σ(e) = e and δ(e) = 0 for every idempotent e. Witness roles: e, map.
template <Ring R>
Verdict idempotents_fixed(const Derivation<R>& delta) {
  return timed([&] {
    const R& r = delta.ring();
    const auto u = universe_of(r);
    std::size_t evaluated = 0;
    for (const auto& e : u.elements) {
      if (!r.equal(r.mul(e, e), e)) continue;
      ++evaluated;
      const char* bad = !r.equal(delta.sigma()(e), e) ? "sigma" : !r.is_zero(delta(e)) ? "delta" : nullptr;
      if (bad) return detail::finish("idempotents-fixed", u, evaluated, Witness{{"e", r.repr(e)}, {"map", bad}});
    }
    return detail::finish<R>("idempotents-fixed", u, evaluated, std::nullopt);
  });
}

/// σ(1) = 1, as a verdict so it can serve as a hypothesis. Witness role: image.
template <Ring R>
Verdict sigma_unital(const Endomorphism<R>& sigma) {
  Verdict v;
  v.property = "sigma-unital";
  v.bounds.evaluated = 1;
  v.bounds.universe = "the identity element";
  const R& r = sigma.ring();
  if (sigma.unital()) {
    v.status = Status::holds;
  } else {
    v.status = Status::fails;
    v.witness = Witness{{"image", r.repr(sigma(r.one()))}};
  }
  return v;
}

// ---------------------------------------------------------------------------
// Dispatch.

/// Every property name run_property understands, in a stable order.
inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "reversible", "symmetric", "reduced", "abelian",
      "right-sigma-reversible", "left-sigma-reversible", "sigma-reversible",
      "right-sigma-symmetric", "left-sigma-symmetric", "sigma-symmetric",
      "condition-c-sigma", "sigma-rigid", "sigma-compatible", "delta-compatible", "compatible",
      "sigma-unital", "power-annihilation", "word-annihilation", "idempotents-fixed",
      "baer", "quasi-baer", "pq-baer",
      "armendariz", "sigma-skew-armendariz", "sigma-armendariz", "sigma-delta-skew-armendariz",
      "skew-armendariz", "sigma-delta-armendariz",
      "poly-reversible", "poly-symmetric", "triple-coefficient-annihilation",
      "poly-baer-transfer", "poly-quasi-baer-transfer", "poly-pq-baer-transfer"};
  return names;
}

/// True for the properties computed by degree-bounded polynomial searches.
inline bool is_bounded_property(std::string_view name) {
  return name.find("armendariz") != std::string_view::npos || name.rfind("poly-", 0) == 0 ||
         name == "triple-coefficient-annihilation";
}

inline std::optional<ArmendarizVariant> armendariz_variant(std::string_view name) {
  for (auto v : {ArmendarizVariant::plain, ArmendarizVariant::sigma_skew, ArmendarizVariant::sigma_armendariz,
                 ArmendarizVariant::sigma_delta_skew, ArmendarizVariant::skew,
                 ArmendarizVariant::sigma_delta_armendariz}) {
    if (name == property_name(v)) return v;
  }
  return std::nullopt;
}

inline std::optional<BaerKind> transfer_kind(std::string_view name) {
  for (auto k : {BaerKind::baer, BaerKind::quasi_baer, BaerKind::pq_baer}) {
    if (name == transfer_property_name(k)) return k;
  }
  return std::nullopt;
}

template <Ring R>
Verdict run_property(const Instance<R>& inst, std::string_view name, const SearchOptions& opt = {}) {
  const auto& sigma = inst.sigma();
  const auto& delta = inst.delta;
  const R& ring = inst.ring();
  if (name == "reversible") return is_reversible(ring);
  if (name == "symmetric") return is_symmetric(ring);
  if (name == "reduced") return is_reduced(ring);
  if (name == "abelian") return is_abelian(ring);
  if (name == "right-sigma-reversible") return is_right_sigma_reversible(sigma);
  if (name == "left-sigma-reversible") return is_left_sigma_reversible(sigma);
  if (name == "sigma-reversible") return is_sigma_reversible(sigma);
  if (name == "right-sigma-symmetric") return is_right_sigma_symmetric(sigma);
  if (name == "left-sigma-symmetric") return is_left_sigma_symmetric(sigma);
  if (name == "sigma-symmetric") return is_sigma_symmetric(sigma);
  if (name == "condition-c-sigma") return satisfies_condition_c_sigma(sigma);
  if (name == "sigma-rigid") return is_sigma_rigid(sigma);
  if (name == "sigma-compatible") return is_sigma_compatible(sigma);
  if (name == "delta-compatible") return is_delta_compatible(delta);
  if (name == "compatible") return is_compatible(delta);
  if (name == "sigma-unital") return sigma_unital(sigma);
  if (name == "power-annihilation") return powers_annihilate(delta);
  if (name == "word-annihilation") return word_maps_annihilate(delta);
  if (name == "idempotents-fixed") return idempotents_fixed(delta);
  if (auto v = armendariz_variant(name)) return armendariz_bounded(delta, *v, opt);
  if (name == "poly-reversible") return poly_reversible(delta, opt);
  if (name == "poly-symmetric") return poly_symmetric(delta, opt);
  if (name == "triple-coefficient-annihilation") return triple_coefficient_annihilation(delta, opt);
  const bool baer_family = name == "baer" || name == "quasi-baer" || name == "pq-baer" || transfer_kind(name);
  if (baer_family) {
    if constexpr (std::is_same_v<R, FiniteRing>) {
      if (name == "baer") return is_baer(ring);
      if (name == "quasi-baer") return is_quasi_baer(ring);
      if (name == "pq-baer") return is_pq_baer(ring);
      return annihilator_transfer(delta, *transfer_kind(name), opt);
    } else {
      throw NotEnumerable(std::string(name) + " needs a finite ring; " + ring.name() + " is not enumerable");
    }
  }
  throw UnsupportedSpec("unknown property '" + std::string(name) + "'");
}

inline Verdict run_property(const AnyInstance& inst, std::string_view name, const SearchOptions& opt = {}) {
  return std::visit([&](const auto& i) { return run_property(i, name, opt); }, inst);
}

}  // namespace orelab
