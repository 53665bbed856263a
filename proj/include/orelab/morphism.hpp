#pragma once

// Ring endomorphisms and sigma-derivations. Both are validated on
// construction: exhaustively over a finite carrier, over the documented sample
// for structured rings.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/ring.hpp"
#include "orelab/structured.hpp"

namespace orelab {

enum class Validation { exhaustive, sampled };

inline const char* to_string(Validation v) { return v == Validation::exhaustive ? "exhaustive" : "sampled"; }

template <Ring R>
class Endomorphism {
 public:
  using element = typename R::element;
  using Map = std::function<element(const element&)>;

  Endomorphism(std::shared_ptr<const R> ring, std::string name, Map map)
      : ring_(std::move(ring)), name_(std::move(name)), map_(std::move(map)) {
    validate();
  }

  element operator()(const element& a) const { return map_(a); }
  /// σ^k(a)
  element power(std::size_t k, element a) const {
    for (std::size_t i = 0; i < k; ++i) a = map_(a);
    return a;
  }

  const R& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const noexcept { return ring_; }
  const std::string& name() const noexcept { return name_; }
  bool unital() const noexcept { return unital_; }
  bool injective() const noexcept { return injective_; }
  bool is_identity() const noexcept { return identity_; }
  Validation validation() const noexcept { return validation_; }

 private:
  void validate() {
    const R& r = *ring_;
    const auto u = universe_of(r);
    validation_ = u.exhaustive ? Validation::exhaustive : Validation::sampled;
    std::vector<element> images;
    images.reserve(u.elements.size());
    for (const auto& a : u.elements) images.push_back(map_(a));
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
      const auto& a = u.elements[i];
      for (std::size_t j = 0; j < u.elements.size(); ++j) {
        const auto& b = u.elements[j];
        if (!r.equal(map_(r.add(a, b)), r.add(images[i], images[j]))) {
          throw NotAHomomorphism(name_ + " is not additive at (" + r.repr(a) + ", " + r.repr(b) + ")");
        }
        if (!r.equal(map_(r.mul(a, b)), r.mul(images[i], images[j]))) {
          throw NotAHomomorphism(name_ + " is not multiplicative at (" + r.repr(a) + ", " + r.repr(b) + ")");
        }
      }
    }
    unital_ = r.equal(map_(r.one()), r.one());
    identity_ = true;
    injective_ = true;
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
      if (!r.equal(images[i], u.elements[i])) identity_ = false;
      if (r.is_zero(images[i]) && !r.is_zero(u.elements[i])) injective_ = false;
    }
  }

  std::shared_ptr<const R> ring_;
  std::string name_;
  Map map_;
  Validation validation_ = Validation::exhaustive;
  bool unital_ = false;
  bool injective_ = false;
  bool identity_ = false;
};

/// An additive map δ with δ(ab) = σ(a)δ(b) + δ(a)b.
template <Ring R>
class Derivation {
 public:
  using element = typename R::element;
  using Map = std::function<element(const element&)>;

  Derivation(Endomorphism<R> sigma, std::string name, Map map)
      : sigma_(std::move(sigma)), name_(std::move(name)), map_(std::move(map)) {
    validate();
  }

  element operator()(const element& a) const { return map_(a); }
  element power(std::size_t k, element a) const {
    for (std::size_t i = 0; i < k; ++i) a = map_(a);
    return a;
  }

  const Endomorphism<R>& sigma() const noexcept { return sigma_; }
  const R& ring() const noexcept { return sigma_.ring(); }
  const std::string& name() const noexcept { return name_; }
  bool is_zero() const noexcept { return zero_; }
  Validation validation() const noexcept { return sigma_.validation(); }

 private:
  void validate() {
    const R& r = sigma_.ring();
    const auto u = universe_of(r);
    std::vector<element> images;
    images.reserve(u.elements.size());
    zero_ = true;
    for (const auto& a : u.elements) {
      images.push_back(map_(a));
      if (!r.is_zero(images.back())) zero_ = false;
    }
    for (std::size_t i = 0; i < u.elements.size(); ++i) {
      const auto& a = u.elements[i];
      for (std::size_t j = 0; j < u.elements.size(); ++j) {
        const auto& b = u.elements[j];
        if (!r.equal(map_(r.add(a, b)), r.add(images[i], images[j]))) {
          throw NotADerivation(name_ + " is not additive at (" + r.repr(a) + ", " + r.repr(b) + ")");
        }
        const auto twisted = r.add(r.mul(sigma_(a), images[j]), r.mul(images[i], b));
        if (!r.equal(map_(r.mul(a, b)), twisted)) {
          throw NotADerivation(name_ + " breaks d(ab) = s(a)d(b) + d(a)b at (" + r.repr(a) + ", " +
                               r.repr(b) + ")");
        }
      }
    }
  }

  Endomorphism<R> sigma_;
  std::string name_;
  Map map_;
  bool zero_ = true;
};

namespace morphisms {

template <Ring R>
Endomorphism<R> identity(std::shared_ptr<const R> ring) {
  return Endomorphism<R>(std::move(ring), "identity", [](const typename R::element& a) { return a; });
}

/// `images[i]` is the image of element i.
inline Endomorphism<FiniteRing> from_table(std::shared_ptr<const FiniteRing> ring, std::vector<Elem> images,
                                           std::string name = "table") {
  if (images.size() != ring->order()) throw UnsupportedSpec("morphism table must list one image per element");
  for (Elem e : images) {
    if (e >= ring->order()) throw UnsupportedSpec("morphism table entry out of range");
  }
  return Endomorphism<FiniteRing>(std::move(ring), std::move(name), [images](Elem a) { return images[a]; });
}

/// (a, b) -> (b, a) on a product of two copies of the same ring.
inline Endomorphism<FiniteRing> swap(std::shared_ptr<const FiniteRing> ring) {
  const Construction& c = ring->construction();
  if (c.kind != "direct_product" || c.parts.size() != 2 || c.parts[0]->order() != c.parts[1]->order()) {
    throw UnsupportedSpec("swap needs a direct product of two rings of equal order");
  }
  const std::vector<std::size_t> radices{c.parts[0]->order(), c.parts[1]->order()};
  std::vector<Elem> images(ring->order());
  for (std::size_t x = 0; x < ring->order(); ++x) {
    auto d = rings::decompose(x, radices);
    images[x] = static_cast<Elem>(rings::compose_index({d[1], d[0]}, radices));
  }
  return from_table(std::move(ring), std::move(images), "swap");
}

/// [a, b] -> [a, -b] on a triangular2 ring.
inline Endomorphism<FiniteRing> negate_offdiag(std::shared_ptr<const FiniteRing> ring) {
  const Construction& c = ring->construction();
  if (c.kind != "triangular2") throw UnsupportedSpec("negate-offdiag needs a triangular2 ring");
  const std::vector<std::size_t> radices{c.parts[0]->order(), c.parts[1]->order()};
  std::vector<Elem> images(ring->order());
  for (std::size_t x = 0; x < ring->order(); ++x) {
    auto d = rings::decompose(x, radices);
    d[1] = c.parts[1]->neg(static_cast<Elem>(d[1]));
    images[x] = static_cast<Elem>(rings::compose_index(d, radices));
  }
  return from_table(std::move(ring), std::move(images), "negate-offdiag");
}

/// a -> a^p on a commutative ring of prime characteristic p.
inline Endomorphism<FiniteRing> frobenius(std::shared_ptr<const FiniteRing> ring) {
  if (!ring->is_commutative()) throw UnsupportedSpec("frobenius needs a commutative ring");
  std::size_t p = 0;
  Elem acc = 0;
  for (std::size_t k = 1; k <= ring->order(); ++k) {
    acc = ring->add(acc, ring->one());
    if (acc == 0) {
      p = k;
      break;
    }
  }
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw UnsupportedSpec("frobenius needs prime characteristic");
  }
  std::vector<Elem> images(ring->order());
  for (Elem a = 0; a < ring->order(); ++a) {
    Elem r = ring->one();
    for (std::size_t k = 0; k < p; ++k) r = ring->mul(r, a);
    images[a] = r;
  }
  return from_table(std::move(ring), std::move(images), "frobenius");
}

/// f(x) -> f(0) on Z2[x].
inline Endomorphism<Gf2PolyRing> eval_at_zero(std::shared_ptr<const Gf2PolyRing> ring) {
  return Endomorphism<Gf2PolyRing>(std::move(ring), "eval-at-zero", [](const Gf2Poly& f) { return f.at_zero(); });
}

/// [a, t] -> [a, t/2].
inline Endomorphism<IntRatTriangularRing> halve_offdiag(std::shared_ptr<const IntRatTriangularRing> ring) {
  return Endomorphism<IntRatTriangularRing>(std::move(ring), "halve-offdiag", [](const IntRatPair& x) {
    return IntRatPair{x.a, x.t / 2};
  });
}

/// [a, t] -> [a, -t] on the integer/rational triangular ring.
inline Endomorphism<IntRatTriangularRing> negate_offdiag(std::shared_ptr<const IntRatTriangularRing> ring) {
  return Endomorphism<IntRatTriangularRing>(std::move(ring), "negate-offdiag", [](const IntRatPair& x) {
    return IntRatPair{x.a, -x.t};
  });
}

/// s∘t, i.e. a -> s(t(a)).
template <Ring R>
Endomorphism<R> compose(const Endomorphism<R>& s, const Endomorphism<R>& t) {
  return Endomorphism<R>(s.ring_ptr(), s.name() + "*" + t.name(),
                         [s, t](const typename R::element& a) { return s(t(a)); });
}

}  // namespace morphisms

namespace derivations {

template <Ring R>
Derivation<R> zero(const Endomorphism<R>& sigma) {
  auto ring = sigma.ring_ptr();
  return Derivation<R>(sigma, "zero", [ring](const typename R::element&) { return ring->zero(); });
}

/// δ(a) = c·a − σ(a)·c.
template <Ring R>
Derivation<R> inner(const Endomorphism<R>& sigma, const typename R::element& c) {
  auto ring = sigma.ring_ptr();
  return Derivation<R>(sigma, "inner(" + ring->repr(c) + ")", [ring, sigma, c](const typename R::element& a) {
    return ring->add(ring->mul(c, a), ring->neg(ring->mul(sigma(a), c)));
  });
}

inline Derivation<FiniteRing> from_table(const Endomorphism<FiniteRing>& sigma, std::vector<Elem> images,
                                         std::string name = "table") {
  if (images.size() != sigma.ring().order()) throw UnsupportedSpec("derivation table must list one image per element");
  for (Elem e : images) {
    if (e >= sigma.ring().order()) throw UnsupportedSpec("derivation table entry out of range");
  }
  return Derivation<FiniteRing>(sigma, std::move(name), [images](Elem a) { return images[a]; });
}

}  // namespace derivations

/// The image table of a map on a finite ring.
template <class Map>
std::vector<Elem> tabulate(const FiniteRing& ring, const Map& map) {
  std::vector<Elem> out(ring.order());
  for (Elem a = 0; a < ring.order(); ++a) out[a] = map(a);
  return out;
}

}  // namespace orelab
