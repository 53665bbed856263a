#pragma once

// Degree-bounded searches over pairs and triples of skew polynomials: the
// Armendariz family and reversibility/symmetry of R[x; σ, δ].
//
// Polynomials of degree <= d are coefficient tuples of length d + 1 over the
// ring's universe. Levels d = 0, 1, ..., dmax are searched in order, each level
// visiting only tuples whose top coefficient is nonzero in at least one slot,
// so the smallest-degree counterexample is found first. A level whose cost
// would push the running total past the work cap is either rejected
// (BoundTooLarge) or randomly sampled, per SearchOptions::on_cap.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "orelab/deciders.hpp"
#include "orelab/kernel.hpp"
#include "orelab/morphism.hpp"
#include "orelab/ore.hpp"
#include "orelab/verdict.hpp"

namespace orelab {

enum class CapPolicy { reject, sample };

inline constexpr std::size_t kDefaultWorkCap = 50'000'000;
/// Hard limit on how many tuples of one length a search will list.
inline constexpr std::size_t kMaxTuples = std::size_t{1} << 20;

struct SearchOptions {
  std::size_t dmax = 2;
  std::size_t work_cap = kDefaultWorkCap;
  std::uint64_t seed = 20240601;
  CapPolicy on_cap = CapPolicy::sample;
};

namespace detail {

inline std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > SIZE_MAX / base) return SIZE_MAX;
    r *= base;
  }
  return r;
}

/// Every coefficient tuple of a fixed length over a universe, stored flat,
/// first coefficient varying fastest.
template <class E>
class TupleList {
 public:
  TupleList(const std::vector<E>& universe, std::size_t length) : length_(length) {
    const std::size_t count = saturating_pow(universe.size(), length);
    if (count > kMaxTuples) {
      throw BoundTooLarge(std::to_string(universe.size()) + "^" + std::to_string(length) +
                          " coefficient tuples exceed the listing limit");
    }
    data_.reserve(count * length);
    std::vector<std::size_t> idx(length, 0);
    for (std::size_t t = 0; t < count; ++t) {
      for (std::size_t k = 0; k < length; ++k) data_.push_back(universe[idx[k]]);
      for (std::size_t k = 0; k < length; ++k) {
        if (++idx[k] < universe.size()) break;
        idx[k] = 0;
      }
    }
    count_ = count;
  }
  std::size_t size() const noexcept { return count_; }
  std::size_t length() const noexcept { return length_; }
  std::span<const E> operator[](std::size_t t) const { return {data_.data() + t * length_, length_}; }

 private:
  std::size_t length_;
  std::size_t count_ = 0;
  std::vector<E> data_;
};

template <class K, class E>
bool all_zero(const K& kernel, std::span<const E> f) {
  for (const auto& c : f) {
    if (!kernel.ring().is_zero(c)) return false;
  }
  return true;
}

template <Ring R>
Verdict poly_verdict(std::string property, const Universe<R>& u, const SearchOptions& opt, std::size_t evaluated,
                     bool randomized, std::optional<Witness> witness) {
  Verdict v;
  v.property = std::move(property);
  v.bounds.dmax = opt.dmax;
  v.bounds.work_cap = opt.work_cap;
  v.bounds.evaluated = evaluated;
  v.bounds.universe = u.description;
  if (randomized) v.bounds.seed = opt.seed;
  v.sampled = randomized || !u.exhaustive;
  if (witness) {
    v.status = Status::fails;
    v.witness = std::move(witness);
  } else {
    v.status = Status::holds_up_to_bound;
  }
  return v;
}

inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& property, std::size_t level) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (char c : property) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
  return h ^ (level * 0xbf58476d1ce4e5b9ull);
}

}  // namespace detail

/// Visits pairs (f, g) of polynomials of degree <= dmax with their product fg.
/// `visit(f, g, fg)` returns a witness to stop the search.
template <Ring R, class Visit>
Verdict search_pairs(const PolyKernel<R>& kernel, const SearchOptions& opt, std::string property, Visit visit) {
  return timed([&] {
    using E = typename R::element;
    const auto u = universe_of(kernel.ring());
    const std::size_t n = u.elements.size();
    std::size_t total = 0;
    for (std::size_t d = 0; d <= opt.dmax; ++d) total += detail::saturating_pow(n, 2 * (d + 1));
    if (opt.on_cap == CapPolicy::reject && total > opt.work_cap) {
      throw BoundTooLarge(property + ": " + std::to_string(n) + "^" + std::to_string(2 * (opt.dmax + 1)) +
                          " polynomial pairs exceed the work cap of " + std::to_string(opt.work_cap));
    }
    std::vector<E> fg;
    std::size_t evaluated = 0;
    bool randomized = false;
    for (std::size_t d = 0; d <= opt.dmax; ++d) {
      const detail::TupleList<E> tuples(u.elements, d + 1);
      const std::size_t level = detail::saturating_pow(tuples.size(), 2);
      auto try_pair = [&](std::span<const E> f, std::span<const E> g) -> std::optional<Witness> {
        ++evaluated;
        kernel.mul(f, g, fg);
        return visit(f, g, std::span<const E>(fg));
      };
      if (evaluated + level <= opt.work_cap) {
        for (std::size_t a = 0; a < tuples.size(); ++a) {
          const auto f = tuples[a];
          const bool f_top = !kernel.ring().is_zero(f[d]);
          for (std::size_t b = 0; b < tuples.size(); ++b) {
            const auto g = tuples[b];
            if (!f_top && kernel.ring().is_zero(g[d])) continue;
            if (auto w = try_pair(f, g)) return detail::poly_verdict(property, u, opt, evaluated, randomized, w);
          }
        }
      } else {
        randomized = true;
        const std::size_t budget =
            std::max<std::size_t>((opt.work_cap > evaluated ? opt.work_cap - evaluated : 0) / (opt.dmax - d + 1), 1);
        std::mt19937_64 rng(detail::mix_seed(opt.seed, property, d));
        std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
        for (std::size_t s = 0; s < budget && evaluated < opt.work_cap; ++s) {
          const auto f = tuples[pick(rng)];
          const auto g = tuples[pick(rng)];
          if (auto w = try_pair(f, g)) return detail::poly_verdict(property, u, opt, evaluated, randomized, w);
        }
      }
    }
    return detail::poly_verdict<R>(property, u, opt, evaluated, randomized, std::nullopt);
  });
}

/// Visits triples (f, g, h) with the product (fg)h. Past the work cap, random
/// pairs (f, g) are drawn and every h is tried against each.
template <Ring R, class Visit>
Verdict search_triples(const PolyKernel<R>& kernel, const SearchOptions& opt, std::string property, Visit visit) {
  return timed([&] {
    using E = typename R::element;
    const auto u = universe_of(kernel.ring());
    const std::size_t n = u.elements.size();
    std::size_t total = 0;
    for (std::size_t d = 0; d <= opt.dmax; ++d) total += detail::saturating_pow(n, 3 * (d + 1));
    if (opt.on_cap == CapPolicy::reject && total > opt.work_cap) {
      throw BoundTooLarge(property + ": " + std::to_string(n) + "^" + std::to_string(3 * (opt.dmax + 1)) +
                          " polynomial triples exceed the work cap of " + std::to_string(opt.work_cap));
    }
    std::vector<E> fg, fgh;
    std::size_t evaluated = 0;
    bool randomized = false;
    // Sampling sweeps every h for a pair, so the sweep itself stops at the cap.
    const std::size_t cap = opt.work_cap;
    for (std::size_t d = 0; d <= opt.dmax; ++d) {
      const detail::TupleList<E> tuples(u.elements, d + 1);
      const std::size_t m = tuples.size();
      const std::size_t level = detail::saturating_pow(m, 3);
      auto sweep_h = [&](std::span<const E> f, std::span<const E> g, bool fg_top) -> std::optional<Witness> {
        kernel.mul(f, g, fg);
        if (detail::all_zero(kernel, std::span<const E>(fg))) {
          // (fg)h = 0 for every h; visit each without re-multiplying.
          fgh.assign(fg.size() + d, kernel.ring().zero());
          for (std::size_t c = 0; c < m && evaluated < cap; ++c) {
            const auto h = tuples[c];
            if (!fg_top && kernel.ring().is_zero(h[d])) continue;
            ++evaluated;
            if (auto w = visit(f, g, h, std::span<const E>(fgh))) return w;
          }
          return std::nullopt;
        }
        for (std::size_t c = 0; c < m && evaluated < cap; ++c) {
          const auto h = tuples[c];
          if (!fg_top && kernel.ring().is_zero(h[d])) continue;
          ++evaluated;
          kernel.mul(std::span<const E>(fg), h, fgh);
          if (auto w = visit(f, g, h, std::span<const E>(fgh))) return w;
        }
        return std::nullopt;
      };
      if (evaluated + level <= opt.work_cap) {
        for (std::size_t a = 0; a < m; ++a) {
          const auto f = tuples[a];
          const bool f_top = !kernel.ring().is_zero(f[d]);
          for (std::size_t b = 0; b < m; ++b) {
            const auto g = tuples[b];
            const bool top = f_top || !kernel.ring().is_zero(g[d]);
            if (auto w = sweep_h(f, g, top)) return detail::poly_verdict(property, u, opt, evaluated, randomized, w);
          }
        }
      } else {
        randomized = true;
        const std::size_t budget = opt.work_cap > evaluated ? opt.work_cap - evaluated : 0;
        const std::size_t pairs = std::max<std::size_t>(budget / std::max<std::size_t>(m, 1) / (opt.dmax - d + 1), 1);
        std::mt19937_64 rng(detail::mix_seed(opt.seed, property, d));
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t s = 0; s < pairs; ++s) {
          const auto f = tuples[pick(rng)];
          const auto g = tuples[pick(rng)];
          if (auto w = sweep_h(f, g, true)) return detail::poly_verdict(property, u, opt, evaluated, randomized, w);
          if (evaluated >= cap) break;
        }
      }
    }
    return detail::poly_verdict<R>(property, u, opt, evaluated, randomized, std::nullopt);
  });
}

enum class ArmendarizVariant {
  plain,                   // R[x]: fg = 0 implies a_i b_j = 0
  sigma_skew,              // R[x;σ]: fg = 0 implies a_i σ^i(b_j) = 0
  sigma_armendariz,        // R[x;σ]: fg = 0 implies a_i b_j = 0
  sigma_delta_skew,        // R[x;σ,δ]: fg = 0 implies a_i x^i b_j x^j = 0
  skew,                    // R[x;σ,δ]: fg = 0 implies a_0 b_j = 0
  sigma_delta_armendariz,  // R[x;σ,δ]: fg = 0 implies a_i b_j = 0
};

inline const char* property_name(ArmendarizVariant v) {
  switch (v) {
    case ArmendarizVariant::plain: return "armendariz";
    case ArmendarizVariant::sigma_skew: return "sigma-skew-armendariz";
    case ArmendarizVariant::sigma_armendariz: return "sigma-armendariz";
    case ArmendarizVariant::sigma_delta_skew: return "sigma-delta-skew-armendariz";
    case ArmendarizVariant::skew: return "skew-armendariz";
    case ArmendarizVariant::sigma_delta_armendariz: return "sigma-delta-armendariz";
  }
  return "?";
}

/// The extension a variant multiplies in: δ is forced to zero for the σ-only
/// variants and σ to the identity for the plain one.
template <Ring R>
OreExtension<R> variant_extension(const Derivation<R>& delta, ArmendarizVariant variant) {
  switch (variant) {
    case ArmendarizVariant::plain:
      return OreExtension<R>(derivations::zero(morphisms::identity(delta.sigma().ring_ptr())));
    case ArmendarizVariant::sigma_skew:
    case ArmendarizVariant::sigma_armendariz:
      return OreExtension<R>(derivations::zero(delta.sigma()));
    default:
      return OreExtension<R>(delta);
  }
}

/// The coefficient condition a variant demands of a vanishing product, as the
/// first violating (i, j), if any.
template <Ring R>
std::optional<std::pair<std::size_t, std::size_t>> armendariz_violation(const PolyKernel<R>& kernel,
                                                                        ArmendarizVariant variant,
                                                                        std::span<const typename R::element> f,
                                                                        std::span<const typename R::element> g) {
  const R& r = kernel.ring();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (r.is_zero(f[i])) continue;
    if (variant == ArmendarizVariant::skew && i > 0) break;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (r.is_zero(g[j])) continue;
      bool bad = false;
      switch (variant) {
        case ArmendarizVariant::sigma_skew:
          bad = !r.is_zero(r.mul(f[i], kernel.sigma_power(i, g[j])));
          break;
        case ArmendarizVariant::sigma_delta_skew:
          for (std::size_t l = 0; l <= i && !bad; ++l) bad = !r.is_zero(r.mul(f[i], kernel.shift(i, l, g[j])));
          break;
        default:
          bad = !r.is_zero(r.mul(f[i], g[j]));
      }
      if (bad) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

/// Bounded Armendariz-type decider. Witness roles: f, g, i, j.
template <Ring R>
Verdict armendariz_bounded(const Derivation<R>& delta, ArmendarizVariant variant, const SearchOptions& opt) {
  if (opt.dmax < 1) throw BoundTooLarge("Armendariz searches need dmax >= 1");
  using E = typename R::element;
  const PolyKernel<R> kernel(variant_extension(delta, variant), 2 * opt.dmax + 2);
  return search_pairs(kernel, opt, property_name(variant),
                      [&](std::span<const E> f, std::span<const E> g, std::span<const E> fg) -> std::optional<Witness> {
                        if (!detail::all_zero(kernel, fg)) return std::nullopt;
                        if (auto ij = armendariz_violation(kernel, variant, f, g)) {
                          return Witness{{"f", kernel.format(f)},
                                         {"g", kernel.format(g)},
                                         {"i", std::to_string(ij->first)},
                                         {"j", std::to_string(ij->second)}};
                        }
                        return std::nullopt;
                      });
}

/// R[x;σ,δ] reversible up to degree dmax: fg = 0 implies gf = 0.
template <Ring R>
Verdict poly_reversible(const Derivation<R>& delta, const SearchOptions& opt) {
  using E = typename R::element;
  const PolyKernel<R> kernel(OreExtension<R>(delta), 2 * opt.dmax + 2);
  std::vector<E> gf;
  return search_pairs(kernel, opt, "poly-reversible",
                      [&](std::span<const E> f, std::span<const E> g, std::span<const E> fg) -> std::optional<Witness> {
                        if (!detail::all_zero(kernel, fg)) return std::nullopt;
                        kernel.mul(g, f, gf);
                        if (detail::all_zero(kernel, std::span<const E>(gf))) return std::nullopt;
                        return Witness{{"f", kernel.format(f)}, {"g", kernel.format(g)}};
                      });
}

/// R[x;σ,δ] symmetric up to degree dmax: fgh = 0 implies fhg = 0.
template <Ring R>
Verdict poly_symmetric(const Derivation<R>& delta, const SearchOptions& opt) {
  using E = typename R::element;
  const PolyKernel<R> kernel(OreExtension<R>(delta), 3 * opt.dmax + 2);
  std::vector<E> fh, fhg;
  return search_triples(kernel, opt, "poly-symmetric",
                        [&](std::span<const E> f, std::span<const E> g, std::span<const E> h,
                            std::span<const E> fgh) -> std::optional<Witness> {
                          if (!detail::all_zero(kernel, fgh)) return std::nullopt;
                          kernel.mul(f, h, fh);
                          kernel.mul(std::span<const E>(fh), g, fhg);
                          if (detail::all_zero(kernel, std::span<const E>(fhg))) return std::nullopt;
                          return Witness{{"f", kernel.format(f)}, {"g", kernel.format(g)}, {"h", kernel.format(h)}};
                        });
}

/// fgh = 0 in R[x;σ,δ] implies a_i b_j c_k = 0, up to degree dmax. Witness
/// roles: f, g, h, i, j, k.
template <Ring R>
Verdict triple_coefficient_annihilation(const Derivation<R>& delta, const SearchOptions& opt) {
  using E = typename R::element;
  const PolyKernel<R> kernel(OreExtension<R>(delta), 3 * opt.dmax + 2);
  const R& r = kernel.ring();
  return search_triples(kernel, opt, "triple-coefficient-annihilation",
                        [&](std::span<const E> f, std::span<const E> g, std::span<const E> h,
                            std::span<const E> fgh) -> std::optional<Witness> {
                          if (!detail::all_zero(kernel, fgh)) return std::nullopt;
                          for (std::size_t i = 0; i < f.size(); ++i) {
                            if (r.is_zero(f[i])) continue;
                            for (std::size_t j = 0; j < g.size(); ++j) {
                              const E ab = r.mul(f[i], g[j]);
                              if (r.is_zero(ab)) continue;
                              for (std::size_t k = 0; k < h.size(); ++k) {
                                if (!r.is_zero(r.mul(ab, h[k]))) {
                                  return Witness{{"f", kernel.format(f)}, {"g", kernel.format(g)},
                                                 {"h", kernel.format(h)}, {"i", std::to_string(i)},
                                                 {"j", std::to_string(j)}, {"k", std::to_string(k)}};
                                }
                              }
                            }
                          }
                          return std::nullopt;
                        });
}

}  // namespace orelab
