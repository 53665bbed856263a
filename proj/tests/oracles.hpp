#pragma once

// Independent brute-force oracles for the tests. Everything here works from
// the operation tables and the definitions only; none of it calls the
// library's deciders, closures or search kernels.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "orelab/orelab.hpp"

namespace oracle {

using orelab::Elem;
using orelab::FiniteRing;

inline std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem e = 0; e < r.order(); ++e) {
    if (r.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

/// Subsets of the carrier as bit masks.
using Mask = std::uint64_t;

inline Mask bit(Elem a) { return Mask{1} << a; }

inline Mask right_annihilator(const FiniteRing& r, Mask x) {
  Mask out = 0;
  for (Elem c = 0; c < r.order(); ++c) {
    bool kills = true;
    for (Elem d = 0; d < r.order() && kills; ++d) {
      if (x & bit(d)) kills = r.mul(d, c) == 0;
    }
    if (kills) out |= bit(c);
  }
  return out;
}

inline Mask right_ideal_of(const FiniteRing& r, Elem e) {
  Mask out = 0;
  for (Elem x = 0; x < r.order(); ++x) out |= bit(r.mul(e, x));
  return out;
}

inline bool idempotent_generated(const FiniteRing& r, Mask s) {
  for (Elem e : idempotents(r)) {
    if (right_ideal_of(r, e) == s) return true;
  }
  return false;
}

/// Every right ideal, by testing every subset for closure (order <= 8).
inline std::vector<Mask> right_ideals(const FiniteRing& r) {
  std::vector<Mask> out;
  const std::size_t n = r.order();
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!(s & 1)) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a) {
      if (!(s & bit(a))) continue;
      for (Elem b = 0; b < n && closed; ++b) {
        if ((s & bit(b)) && !(s & bit(r.add(a, b)))) closed = false;
        if (!(s & bit(r.mul(a, b)))) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

/// Baer: r(X) idempotent-generated for every nonempty subset X (order <= 8).
inline bool baer(const FiniteRing& r) {
  for (Mask x = 1; x < (Mask{1} << r.order()); ++x) {
    if (!idempotent_generated(r, right_annihilator(r, x))) return false;
  }
  return true;
}

inline bool quasi_baer(const FiniteRing& r) {
  for (Mask i : right_ideals(r)) {
    if (!idempotent_generated(r, right_annihilator(r, i))) return false;
  }
  return true;
}

inline bool pq_baer(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a) {
    if (!idempotent_generated(r, right_annihilator(r, right_ideal_of(r, a)))) return false;
  }
  return true;
}

/// Every unital ring endomorphism as an image table, by backtracking over
/// carrier order and checking + and · on every assigned pair.
inline std::vector<std::vector<Elem>> unital_endomorphisms(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> map(n, 0);
  std::function<void(Elem)> extend = [&](Elem k) {
    if (k == n) {
      if (map[r.one()] == r.one()) out.push_back(map);
      return;
    }
    for (Elem y = 0; y < n; ++y) {
      map[k] = y;
      bool ok = k != 0 || y == 0;
      for (Elem a = 0; a <= k && ok; ++a) {
        const Elem s = r.add(a, k), p = r.mul(a, k), q = r.mul(k, a);
        if (s <= k) ok = map[s] == r.add(map[a], map[k]);
        if (ok && p <= k) ok = map[p] == r.mul(map[a], map[k]);
        if (ok && q <= k) ok = map[q] == r.mul(map[k], map[a]);
      }
      if (ok) extend(k + 1);
    }
  };
  extend(0);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// A random polynomial of degree at most `dmax` with uniformly random coefficients.
inline orelab::SkewPolynomial<FiniteRing> random_poly(const orelab::OreExtension<FiniteRing>& ext, std::mt19937_64& rng,
                                                      std::size_t dmax) {
  std::uniform_int_distribution<Elem> coeff(0, static_cast<Elem>(ext.ring().order() - 1));
  std::uniform_int_distribution<std::size_t> deg(0, dmax);
  std::vector<Elem> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return ext.make(std::move(c));
}

}  // namespace oracle
