#pragma once

// Right annihilators r_R(X) = {c : dc = 0 for all d in X} in a finite ring,
// the Baer / quasi-Baer / p.q.-Baer deciders built on them, and the bounded
// checks that the Baer-type properties pass to R[x; σ, δ].

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orelab/deciders.hpp"
#include "orelab/kernel.hpp"
#include "orelab/poly_search.hpp"
#include "orelab/ring.hpp"
#include "orelab/verdict.hpp"

namespace orelab {

/// A subset of a finite ring's carrier as a bit mask over element indices.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  static ElementSet all(std::size_t order) {
    return ElementSet(order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1);
  }
  static ElementSet of(std::initializer_list<Elem> elems) {
    ElementSet s;
    for (Elem e : elems) s.insert(e);
    return s;
  }

  void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  bool contains(Elem e) const noexcept { return (bits_ >> e) & 1u; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<Elem>(std::countr_zero(b)));
    return out;
  }

  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Prints a set as {a,b,...} in carrier order.
inline std::string format_set(const FiniteRing& ring, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.members()) {
    out += (first ? "" : ",") + ring.repr(e);
    first = false;
  }
  return out + "}";
}

/// Splits "{x,y,...}" at top-level commas; element names may themselves
/// contain bracketed commas.
inline std::vector<std::string> split_set_literal(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("expected a set literal {..}, got '" + std::string(text) + "'");
  }
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

inline ElementSet parse_set(const FiniteRing& ring, std::string_view text) {
  ElementSet s;
  for (const auto& part : split_set_literal(text)) s.insert(ring.parse(part));
  return s;
}

/// r_R(X) together with a description of X.
struct AnnihilatorSet {
  std::string generator;
  ElementSet members;
};

/// r_R({a}).
inline ElementSet right_annihilator(const FiniteRing& ring, Elem a) {
  ElementSet s;
  for (Elem c = 0; c < ring.order(); ++c) {
    if (ring.mul(a, c) == 0) s.insert(c);
  }
  return s;
}

/// r_R(X) = ∩_{x∈X} r_R({x}); r_R(∅) = R.
inline AnnihilatorSet right_annihilator(const FiniteRing& ring, ElementSet x) {
  ElementSet s = ElementSet::all(ring.order());
  for (Elem a : x.members()) s = s & right_annihilator(ring, a);
  return {format_set(ring, x), s};
}

/// aR.
inline ElementSet principal_right_ideal(const FiniteRing& ring, Elem a) {
  ElementSet s;
  for (Elem r = 0; r < ring.order(); ++r) s.insert(ring.mul(a, r));
  return s;
}

/// The right ideal generated by X: all finite sums of products x·r.
inline ElementSet right_ideal_generated(const FiniteRing& ring, ElementSet x) {
  ElementSet ideal = ElementSet::of({0});
  for (Elem a : x.members()) {
    const ElementSet ar = principal_right_ideal(ring, a);
    ElementSet sums;
    for (Elem u : ideal.members())
      for (Elem v : ar.members()) sums.insert(ring.add(u, v));
    ideal = sums;
  }
  return ideal;
}

/// r_R(aR) = {c : a r c = 0 for all r}.
inline ElementSet right_annihilator_of_principal(const FiniteRing& ring, Elem a) {
  ElementSet s = ElementSet::all(ring.order());
  for (Elem r = 0; r < ring.order(); ++r) s = s & right_annihilator(ring, ring.mul(a, r));
  return s;
}

/// Idempotent e with eR equal to `s`, if one exists (first in carrier order).
inline std::optional<Elem> idempotent_generator(const FiniteRing& ring, ElementSet s) {
  for (Elem e : enumerate_idempotents(ring)) {
    if (principal_right_ideal(ring, e) == s) return e;
  }
  return std::nullopt;
}

/// Upper bound on distinct annihilators collected by the intersection closure.
inline constexpr std::size_t kMaxAnnihilatorSets = 1u << 16;

/// The family of annihilators a Baer-type decider inspects, in discovery order.
struct AnnihilatorFamily {
  std::vector<AnnihilatorSet> sets;
};

namespace detail {

/// Closes `seeds` under pairwise intersection; seeds keep their order, new
/// sets follow in breadth-first order. Generators are tracked as element sets.
inline AnnihilatorFamily close_under_intersection(const FiniteRing& ring, const std::vector<ElementSet>& seed_masks,
                                                  const std::vector<ElementSet>& seed_generators, const char* suffix) {
  AnnihilatorFamily fam;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<ElementSet> gens;
  auto describe = [&](ElementSet g) { return format_set(ring, g) + suffix; };
  for (std::size_t i = 0; i < seed_masks.size(); ++i) {
    if (seen.emplace(seed_masks[i].bits(), fam.sets.size()).second) {
      fam.sets.push_back({describe(seed_generators[i]), seed_masks[i]});
      gens.push_back(seed_generators[i]);
    }
  }
  for (std::size_t cur = 0; cur < fam.sets.size(); ++cur) {
    for (std::size_t i = 0; i < seed_masks.size(); ++i) {
      const ElementSet meet = fam.sets[cur].members & seed_masks[i];
      if (seen.count(meet.bits())) continue;
      if (fam.sets.size() >= kMaxAnnihilatorSets) {
        throw WorkCapExceeded("annihilator closure exceeded " + std::to_string(kMaxAnnihilatorSets) + " sets");
      }
      seen.emplace(meet.bits(), fam.sets.size());
      const ElementSet g = gens[cur] | seed_generators[i];
      fam.sets.push_back({describe(g), meet});
      gens.push_back(g);
    }
  }
  return fam;
}

inline Verdict check_family(const FiniteRing& ring, std::string property, const AnnihilatorFamily& fam) {
  return timed([&] {
    Verdict v;
    v.property = std::move(property);
    v.bounds.universe = "all " + std::to_string(ring.order()) + " elements";
    for (const auto& set : fam.sets) {
      ++v.bounds.evaluated;
      if (!idempotent_generator(ring, set.members)) {
        v.status = Status::fails;
        v.witness = Witness{{"generated-by", set.generator}, {"annihilator", format_set(ring, set.members)}};
        return v;
      }
    }
    v.status = Status::holds;
    return v;
  });
}

}  // namespace detail

/// Every r_R(X), X a nonempty subset: intersections of the r_R({a}).
inline AnnihilatorFamily subset_annihilators(const FiniteRing& ring) {
  std::vector<ElementSet> masks, gens;
  for (Elem a = 0; a < ring.order(); ++a) {
    masks.push_back(right_annihilator(ring, a));
    gens.push_back(ElementSet::of({a}));
  }
  return detail::close_under_intersection(ring, masks, gens, "");
}

/// Every r_R(I), I a nonzero-generated right ideal: intersections of the r_R(aR).
inline AnnihilatorFamily right_ideal_annihilators(const FiniteRing& ring) {
  std::vector<ElementSet> masks, gens;
  for (Elem a = 0; a < ring.order(); ++a) {
    masks.push_back(right_annihilator_of_principal(ring, a));
    gens.push_back(ElementSet::of({a}));
  }
  return detail::close_under_intersection(ring, masks, gens, "R");
}

/// The r_R(aR) for each a.
inline AnnihilatorFamily principal_ideal_annihilators(const FiniteRing& ring) {
  AnnihilatorFamily fam;
  for (Elem a = 0; a < ring.order(); ++a) {
    fam.sets.push_back({format_set(ring, ElementSet::of({a})) + "R", right_annihilator_of_principal(ring, a)});
  }
  return fam;
}

/// Witness roles for the Baer family: generated-by, annihilator.
inline Verdict is_baer(const FiniteRing& ring) { return detail::check_family(ring, "baer", subset_annihilators(ring)); }
inline Verdict is_quasi_baer(const FiniteRing& ring) {
  return detail::check_family(ring, "quasi-baer", right_ideal_annihilators(ring));
}
/// Right p.q.-Baer: every r_R(aR) is eR for an idempotent e.
inline Verdict is_pq_baer(const FiniteRing& ring) {
  return detail::check_family(ring, "pq-baer", principal_ideal_annihilators(ring));
}

// ---------------------------------------------------------------------------
// Transfer to R[x; σ, δ] at bounded degree.

enum class BaerKind { baer, quasi_baer, pq_baer };

inline const char* transfer_property_name(BaerKind k) {
  switch (k) {
    case BaerKind::baer: return "poly-baer-transfer";
    case BaerKind::quasi_baer: return "poly-quasi-baer-transfer";
    case BaerKind::pq_baer: return "poly-pq-baer-transfer";
  }
  return "?";
}

/// A bit set over the polynomials of degree <= dmax.
class PolySet {
 public:
  explicit PolySet(std::size_t size = 0) : words_((size + 63) / 64, 0), size_(size) {}
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void intersect(const PolySet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  }
  /// First index in exactly one of the two sets.
  std::optional<std::size_t> first_difference(const PolySet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t x = words_[w] ^ o.words_[w];
      if (x) return w * 64 + static_cast<std::size_t>(std::countr_zero(x));
    }
    return std::nullopt;
  }
  friend bool operator==(const PolySet&, const PolySet&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_;
};

/// Everything the transfer check needs about one generator polynomial p.
struct TransferData {
  PolySet annihilator;  // r_V(A) for A = {p} (Baer) or pR[x] (quasi/p.q.), within V
  ElementSet coefficient_annihilator;  // r_R(A*)
};

/// Shared machinery for the Baer-type transfer checks over the space V of
/// polynomials of degree <= dmax.
class TransferContext {
 public:
  TransferContext(const Derivation<FiniteRing>& delta, std::size_t dmax)
      : kernel_(OreExtension<FiniteRing>(delta), 2 * dmax + 2),
        ring_(kernel_.ring()),
        dmax_(dmax),
        space_(ring_.elements(), dmax + 1) {
    for (Elem e : enumerate_idempotents(ring_)) {
      const ElementSet eR = principal_right_ideal(ring_, e);
      PolySet m(space_.size());
      for (std::size_t q = 0; q < space_.size(); ++q) {
        bool inside = true;
        for (Elem c : space_[q]) inside = inside && eR.contains(c);
        if (inside) m.insert(q);
      }
      idempotents_.push_back({e, eR, std::move(m)});
    }
    for (Elem a = 0; a < ring_.order(); ++a) principal_ann_.push_back(right_annihilator_of_principal(ring_, a));
  }

  std::size_t size() const noexcept { return space_.size(); }
  const detail::TupleList<Elem>& space() const noexcept { return space_; }
  const PolyKernel<FiniteRing>& kernel() const noexcept { return kernel_; }
  std::string format(std::size_t p) const { return kernel_.format(space_[p]); }

  /// Index of a coefficient tuple of length dmax + 1 in V.
  std::size_t index_of(std::span<const Elem> coeffs) const {
    std::size_t idx = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) idx = idx * ring_.order() + coeffs[k];
    return idx;
  }

  /// A = {p}: r_V(p) and r_R(coefficients of p).
  TransferData subset_data(std::size_t p) const {
    TransferData out{PolySet(space_.size()), ElementSet::all(ring_.order())};
    std::vector<Elem> prod;
    for (std::size_t q = 0; q < space_.size(); ++q) {
      kernel_.mul(space_[p], space_[q], prod);
      if (detail::all_zero(kernel_, std::span<const Elem>(prod))) out.annihilator.insert(q);
    }
    for (Elem c : space_[p]) out.coefficient_annihilator = out.coefficient_annihilator & right_annihilator(ring_, c);
    return out;
  }

  /// A = pR[x]: q with p·r·x^k·q = 0 for all r in R and k <= dmax, and
  /// r_R of the right ideal generated by the coefficients of every p·r.
  TransferData ideal_data(std::size_t p) const {
    TransferData out{PolySet(space_.size()), ElementSet::all(ring_.order())};
    const auto f = space_[p];
    std::vector<std::vector<Elem>> multipliers;  // p·r·x^k, distinct and nonzero
    std::vector<Elem> pr;
    for (Elem r = 0; r < ring_.order(); ++r) {
      const std::vector<Elem> rc{r};
      kernel_.mul(f, std::span<const Elem>(rc), pr);
      for (Elem c : pr) out.coefficient_annihilator = out.coefficient_annihilator & principal_ann_[c];
      if (detail::all_zero(kernel_, std::span<const Elem>(pr))) continue;
      for (std::size_t k = 0; k <= dmax_; ++k) {
        std::vector<Elem> shifted(k, 0);
        shifted.insert(shifted.end(), pr.begin(), pr.end());
        if (std::find(multipliers.begin(), multipliers.end(), shifted) == multipliers.end()) {
          multipliers.push_back(std::move(shifted));
        }
      }
    }
    std::vector<Elem> prod;
    for (std::size_t q = 0; q < space_.size(); ++q) {
      bool kills = true;
      for (const auto& m : multipliers) {
        kernel_.mul(std::span<const Elem>(m), space_[q], prod);
        if (!detail::all_zero(kernel_, std::span<const Elem>(prod))) {
          kills = false;
          break;
        }
      }
      if (kills) out.annihilator.insert(q);
    }
    return out;
  }

  /// Compares r_V(A) with eR[x] ∩ V for the idempotent e generating r_R(A*).
  /// Returns a witness on mismatch.
  std::optional<Witness> compare(const TransferData& data, Witness base) const {
    const auto* gen = generator(data.coefficient_annihilator);
    if (!gen) {
      base.set("e", "none");
      base.set("reason", "coefficient annihilator " + format_set(ring_, data.coefficient_annihilator) +
                             " is not generated by an idempotent");
      return base;
    }
    if (auto q = data.annihilator.first_difference(gen->polys)) {
      base.set("e", ring_.repr(gen->e));
      base.set("q", format(*q));
      base.set("reason", data.annihilator.contains(*q) ? "q annihilates A but is not in eR[x]"
                                                       : "q is in eR[x] but does not annihilate A");
      return base;
    }
    return std::nullopt;
  }

 private:
  struct IdempotentData {
    Elem e;
    ElementSet eR;
    PolySet polys;  // eR[x] ∩ V
  };

  const IdempotentData* generator(ElementSet s) const {
    for (const auto& d : idempotents_) {
      if (d.eR == s) return &d;
    }
    return nullptr;
  }

  PolyKernel<FiniteRing> kernel_;
  const FiniteRing& ring_;
  std::size_t dmax_;
  detail::TupleList<Elem> space_;
  std::vector<IdempotentData> idempotents_;
  std::vector<ElementSet> principal_ann_;
};

/// Bounded transfer check. For every A generated by one or two polynomials of
/// degree <= dmax (a subset for Baer, a right ideal for quasi-Baer, a principal
/// right ideal for p.q.-Baer), r_V(A) must equal eR[x] ∩ V where eR = r_R(A*).
/// Witness roles: p1, optionally p2, e, q, reason.
inline Verdict annihilator_transfer(const Derivation<FiniteRing>& delta, BaerKind kind, const SearchOptions& opt) {
  return timed([&] {
    const TransferContext ctx(delta, opt.dmax);
    const std::size_t m = ctx.size();
    const bool pairs = kind != BaerKind::pq_baer;
    const std::size_t per_generator = kind == BaerKind::baer ? m : m * ctx.kernel().ring().order() * (opt.dmax + 1);
    const std::size_t total = m * per_generator + (pairs ? m * (m - 1) / 2 : 0);
    Verdict v;
    v.property = transfer_property_name(kind);
    v.bounds.dmax = opt.dmax;
    v.bounds.work_cap = opt.work_cap;
    v.bounds.universe = "all " + std::to_string(ctx.kernel().ring().order()) + " elements";
    v.status = Status::holds_up_to_bound;

    std::vector<std::size_t> generators(m);
    std::iota(generators.begin(), generators.end(), std::size_t{0});
    if (total > opt.work_cap) {
      if (opt.on_cap == CapPolicy::reject) {
        throw BoundTooLarge(v.property + ": " + std::to_string(total) + " products exceed the work cap of " +
                            std::to_string(opt.work_cap));
      }
      std::mt19937_64 rng(detail::mix_seed(opt.seed, v.property, 0));
      std::shuffle(generators.begin() + 1, generators.end(), rng);
      const std::size_t keep = std::max<std::size_t>(opt.work_cap / std::max<std::size_t>(per_generator + m, 1), 2);
      if (keep < generators.size()) generators.resize(keep);
      std::sort(generators.begin(), generators.end());
      v.sampled = true;
      v.bounds.seed = opt.seed;
    }

    std::vector<TransferData> data;
    data.reserve(generators.size());
    for (std::size_t p : generators) {
      data.push_back(kind == BaerKind::baer ? ctx.subset_data(p) : ctx.ideal_data(p));
      v.bounds.evaluated += per_generator;
      if (auto w = ctx.compare(data.back(), Witness{{"p1", ctx.format(p)}})) {
        v.status = Status::fails;
        v.witness = std::move(w);
        return v;
      }
    }
    if (pairs) {
      for (std::size_t a = 0; a < data.size(); ++a) {
        for (std::size_t b = a + 1; b < data.size(); ++b) {
          ++v.bounds.evaluated;
          TransferData both = data[a];
          both.annihilator.intersect(data[b].annihilator);
          both.coefficient_annihilator = both.coefficient_annihilator & data[b].coefficient_annihilator;
          if (auto w = ctx.compare(both, Witness{{"p1", ctx.format(generators[a])}, {"p2", ctx.format(generators[b])}})) {
            v.status = Status::fails;
            v.witness = std::move(w);
            return v;
          }
        }
      }
    }
    return v;
  });
}

}  // namespace orelab
