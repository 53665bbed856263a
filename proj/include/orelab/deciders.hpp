#pragma once

// Element-level ring properties. Over a finite ring each decider is exhaustive
// and a passing verdict is `holds`; over a structured ring the scan covers the
// sample set and a passing verdict is a sampled `holds-up-to-bound`.

#include <optional>
#include <string>
#include <vector>

#include "orelab/morphism.hpp"
#include "orelab/ring.hpp"
#include "orelab/verdict.hpp"

namespace orelab {

namespace detail {

template <Ring R>
Verdict finish(std::string property, const Universe<R>& u, std::size_t evaluated, std::optional<Witness> witness) {
  Verdict v;
  v.property = std::move(property);
  v.bounds.universe = u.description;
  v.bounds.evaluated = evaluated;
  if (witness) {
    v.status = Status::fails;
    v.witness = std::move(witness);
  } else if (u.exhaustive) {
    v.status = Status::holds;
  } else {
    v.status = Status::holds_up_to_bound;
    v.sampled = true;
  }
  return v;
}

/// First pair (a, b) in universe order with `violates(a, b)`.
template <Ring R, class Pred>
Verdict scan_pairs(const R& ring, std::string property, Pred violates) {
  return timed([&] {
    const auto u = universe_of(ring);
    std::size_t evaluated = 0;
    for (const auto& a : u.elements) {
      for (const auto& b : u.elements) {
        ++evaluated;
        if (violates(a, b)) {
          return finish(property, u, evaluated, Witness{{"a", ring.repr(a)}, {"b", ring.repr(b)}});
        }
      }
    }
    return finish<R>(property, u, evaluated, std::nullopt);
  });
}

template <Ring R, class Pred>
Verdict scan_triples(const R& ring, std::string property, Pred violates) {
  return timed([&] {
    const auto u = universe_of(ring);
    std::size_t evaluated = 0;
    for (const auto& a : u.elements) {
      for (const auto& b : u.elements) {
        const auto ab = ring.mul(a, b);
        for (const auto& c : u.elements) {
          ++evaluated;
          if (violates(a, b, c, ab)) {
            return finish(property, u, evaluated,
                          Witness{{"a", ring.repr(a)}, {"b", ring.repr(b)}, {"c", ring.repr(c)}});
          }
        }
      }
    }
    return finish<R>(property, u, evaluated, std::nullopt);
  });
}

template <Ring R, class Pred>
Verdict scan_elements(const R& ring, std::string property, Pred violates) {
  return timed([&] {
    const auto u = universe_of(ring);
    std::size_t evaluated = 0;
    for (const auto& a : u.elements) {
      ++evaluated;
      if (violates(a)) return finish(property, u, evaluated, Witness{{"a", ring.repr(a)}});
    }
    return finish<R>(property, u, evaluated, std::nullopt);
  });
}

/// The two-sided verdict: the right-hand check first, then the left.
inline Verdict conjunction(std::string property, Verdict right, Verdict left) {
  Verdict out = right.fails() ? std::move(right) : std::move(left);
  if (!out.fails()) out.status = (right.status == Status::holds && left.status == Status::holds)
                                     ? Status::holds
                                     : Status::holds_up_to_bound;
  if (out.fails()) out.note = "fails on the " + out.property + " side";
  out.property = std::move(property);
  out.bounds.evaluated = right.bounds.evaluated + left.bounds.evaluated;
  out.elapsed = right.elapsed + left.elapsed;
  return out;
}

}  // namespace detail

/// ab = 0 implies ba = 0.
template <Ring R>
Verdict is_reversible(const R& ring) {
  return detail::scan_pairs(ring, "reversible", [&](const auto& a, const auto& b) {
    return ring.is_zero(ring.mul(a, b)) && !ring.is_zero(ring.mul(b, a));
  });
}

/// abc = 0 implies acb = 0.
template <Ring R>
Verdict is_symmetric(const R& ring) {
  return detail::scan_triples(ring, "symmetric", [&](const auto& a, const auto& b, const auto& c, const auto& ab) {
    return ring.is_zero(ring.mul(ab, c)) && !ring.is_zero(ring.mul(ring.mul(a, c), b));
  });
}

/// No nonzero nilpotents; it suffices that a² = 0 forces a = 0.
template <Ring R>
Verdict is_reduced(const R& ring) {
  return detail::scan_elements(ring, "reduced", [&](const auto& a) {
    return !ring.is_zero(a) && ring.is_zero(ring.mul(a, a));
  });
}

/// Every idempotent commutes with every element. Witness roles: e, r.
template <Ring R>
Verdict is_abelian(const R& ring) {
  return timed([&] {
    const auto u = universe_of(ring);
    std::size_t evaluated = 0;
    for (const auto& e : u.elements) {
      if (!ring.equal(ring.mul(e, e), e)) continue;
      for (const auto& r : u.elements) {
        ++evaluated;
        if (!ring.equal(ring.mul(e, r), ring.mul(r, e))) {
          return detail::finish(std::string("abelian"), u, evaluated, Witness{{"e", ring.repr(e)}, {"r", ring.repr(r)}});
        }
      }
    }
    return detail::finish<R>("abelian", u, evaluated, std::nullopt);
  });
}

/// ab = 0 implies bσ(a) = 0.
template <Ring R>
Verdict is_right_sigma_reversible(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_pairs(ring, "right-sigma-reversible", [&](const auto& a, const auto& b) {
    return ring.is_zero(ring.mul(a, b)) && !ring.is_zero(ring.mul(b, sigma(a)));
  });
}

/// ab = 0 implies σ(b)a = 0.
template <Ring R>
Verdict is_left_sigma_reversible(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_pairs(ring, "left-sigma-reversible", [&](const auto& a, const auto& b) {
    return ring.is_zero(ring.mul(a, b)) && !ring.is_zero(ring.mul(sigma(b), a));
  });
}

template <Ring R>
Verdict is_sigma_reversible(const Endomorphism<R>& sigma) {
  return detail::conjunction("sigma-reversible", is_right_sigma_reversible(sigma), is_left_sigma_reversible(sigma));
}

/// abc = 0 implies acσ(b) = 0.
template <Ring R>
Verdict is_right_sigma_symmetric(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_triples(ring, "right-sigma-symmetric",
                              [&](const auto& a, const auto& b, const auto& c, const auto& ab) {
                                return ring.is_zero(ring.mul(ab, c)) &&
                                       !ring.is_zero(ring.mul(ring.mul(a, c), sigma(b)));
                              });
}

/// abc = 0 implies σ(b)ac = 0.
template <Ring R>
Verdict is_left_sigma_symmetric(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_triples(ring, "left-sigma-symmetric",
                              [&](const auto& a, const auto& b, const auto& c, const auto& ab) {
                                return ring.is_zero(ring.mul(ab, c)) &&
                                       !ring.is_zero(ring.mul(sigma(b), ring.mul(a, c)));
                              });
}

template <Ring R>
Verdict is_sigma_symmetric(const Endomorphism<R>& sigma) {
  return detail::conjunction("sigma-symmetric", is_right_sigma_symmetric(sigma), is_left_sigma_symmetric(sigma));
}

/// Condition (C_σ): aσ(b) = 0 implies ab = 0.
template <Ring R>
Verdict satisfies_condition_c_sigma(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_pairs(ring, "condition-c-sigma", [&](const auto& a, const auto& b) {
    return ring.is_zero(ring.mul(a, sigma(b))) && !ring.is_zero(ring.mul(a, b));
  });
}

/// aσ(a) = 0 implies a = 0.
template <Ring R>
Verdict is_sigma_rigid(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_elements(ring, "sigma-rigid", [&](const auto& a) {
    return !ring.is_zero(a) && ring.is_zero(ring.mul(a, sigma(a)));
  });
}

/// aσ(b) = 0 if and only if ab = 0.
template <Ring R>
Verdict is_sigma_compatible(const Endomorphism<R>& sigma) {
  const R& ring = sigma.ring();
  return detail::scan_pairs(ring, "sigma-compatible", [&](const auto& a, const auto& b) {
    return ring.is_zero(ring.mul(a, sigma(b))) != ring.is_zero(ring.mul(a, b));
  });
}

/// ab = 0 implies aδ(b) = 0.
template <Ring R>
Verdict is_delta_compatible(const Derivation<R>& delta) {
  const R& ring = delta.ring();
  return detail::scan_pairs(ring, "delta-compatible", [&](const auto& a, const auto& b) {
    return ring.is_zero(ring.mul(a, b)) && !ring.is_zero(ring.mul(a, delta(b)));
  });
}

/// (σ,δ)-compatible: σ-compatible and δ-compatible.
template <Ring R>
Verdict is_compatible(const Derivation<R>& delta) {
  return detail::conjunction("compatible", is_sigma_compatible(delta.sigma()), is_delta_compatible(delta));
}

/// Idempotents over the ring's universe. Only defined for finite rings.
template <Ring R>
std::vector<typename R::element> idempotents_of(const R& ring) {
  if constexpr (EnumerableRing<R>) {
    std::vector<typename R::element> out;
    for (const auto& e : ring.elements()) {
      if (ring.equal(ring.mul(e, e), e)) out.push_back(e);
    }
    return out;
  } else {
    throw NotEnumerable(ring.name() + " has no finite carrier to enumerate idempotents over");
  }
}

}  // namespace orelab
