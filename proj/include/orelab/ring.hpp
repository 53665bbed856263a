#pragma once

// Unital rings: the Ring concept every algorithm is written against, and the
// table-backed FiniteRing with its named constructions.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orelab/errors.hpp"

namespace orelab {

/// Index of an element of a FiniteRing. The zero element is always index 0.
using Elem = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 16;
/// Element sets are 64-bit masks, so no finite ring may exceed this order.
inline constexpr std::size_t kMaxOrder = 64;

// clang-format off
template <class R>
concept Ring = requires(const R& r, const typename R::element& a,
                        const typename R::element& b, std::string_view text) {
  typename R::element;
  { R::enumerable } -> std::convertible_to<bool>;
  { r.name() } -> std::convertible_to<std::string>;
  { r.zero() } -> std::convertible_to<typename R::element>;
  { r.one() } -> std::convertible_to<typename R::element>;
  { r.add(a, b) } -> std::convertible_to<typename R::element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::element>;
  { r.neg(a) } -> std::convertible_to<typename R::element>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.repr(a) } -> std::convertible_to<std::string>;
  { r.parse(text) } -> std::convertible_to<typename R::element>;
  { r.poly_variable() } -> std::convertible_to<std::string>;
};

/// Rings whose whole carrier can be listed.
template <class R>
concept EnumerableRing = Ring<R> && R::enumerable && requires(const R& r) {
  { r.order() } -> std::convertible_to<std::size_t>;
  { r.elements() } -> std::convertible_to<std::vector<typename R::element>>;
};

/// Rings without enumeration; algorithms fall back to a documented sample.
template <class R>
concept SampledRing = Ring<R> && (!R::enumerable) && requires(const R& r) {
  { r.sample() } -> std::convertible_to<std::vector<typename R::element>>;
  { r.sample_description() } -> std::convertible_to<std::string>;
};
// clang-format on

/// The set of elements an exhaustive loop ranges over, and whether that set
/// is the whole carrier.
template <Ring R>
struct Universe {
  std::vector<typename R::element> elements;
  bool exhaustive = false;
  std::string description;
};

template <Ring R>
Universe<R> universe_of(const R& ring) {
  if constexpr (EnumerableRing<R>) {
    return {ring.elements(), true, "all " + std::to_string(ring.order()) + " elements"};
  } else {
    return {ring.sample(), false, ring.sample_description()};
  }
}

template <Ring R>
typename R::element sub(const R& ring, const typename R::element& a, const typename R::element& b) {
  return ring.add(a, ring.neg(b));
}

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  }
  return out;
}

}  // namespace detail

class FiniteRing;

/// How a FiniteRing was built. Named morphism constructors (swap,
/// negate-offdiag, ...) read the components from here.
struct Construction {
  std::string kind = "tables";  // zmod | tables | direct_product | triangular2 | upper_triangular2 | zp_quotient
  std::vector<std::shared_ptr<const FiniteRing>> parts;
  std::size_t characteristic_hint = 0;  // n for zmod, p for zp_quotient
  std::vector<int> modulus;             // zp_quotient modulus coefficients, low degree first
};

/// A finite unital ring stored as dense operation tables over element indices.
/// Construction validates every ring axiom by exhaustion; instances are
/// immutable afterwards.
class FiniteRing {
 public:
  using element = Elem;
  static constexpr bool enumerable = true;

  /// Validates the tables and derives negation, zero and one. The additive
  /// identity must be listed first.
  FiniteRing(std::string name, std::vector<std::string> reprs, std::vector<Elem> add_table,
             std::vector<Elem> mul_table, Construction construction = {},
             std::size_t order_cap = kDefaultOrderCap)
      : name_(std::move(name)),
        reprs_(std::move(reprs)),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        construction_(std::move(construction)) {
    n_ = reprs_.size();
    if (n_ == 0) throw UnsupportedSpec("ring '" + name_ + "' has no elements");
    if (n_ > order_cap || n_ > kMaxOrder) {
      throw UnsupportedSpec("ring '" + name_ + "' has order " + std::to_string(n_) +
                            " above the cap of " + std::to_string(std::min(order_cap, kMaxOrder)));
    }
    if (add_.size() != n_ * n_ || mul_.size() != n_ * n_) {
      throw UnsupportedSpec("ring '" + name_ + "': operation tables must be " + std::to_string(n_) +
                            "x" + std::to_string(n_));
    }
    for (Elem v : add_) check_index(v);
    for (Elem v : mul_) check_index(v);
    for (std::size_t i = 0; i < n_; ++i) {
      std::string key = detail::strip_spaces(reprs_[i]);
      if (!index_.emplace(key, static_cast<Elem>(i)).second) {
        throw UnsupportedSpec("ring '" + name_ + "': duplicate element name '" + reprs_[i] + "'");
      }
    }
    validate();
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }
  std::vector<Elem> elements() const {
    std::vector<Elem> out(n_);
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
  }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  bool equal(Elem a, Elem b) const noexcept { return a == b; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  bool is_commutative() const noexcept { return commutative_; }

  const std::string& repr(Elem a) const { return reprs_.at(a); }
  Elem parse(std::string_view text) const {
    auto it = index_.find(detail::strip_spaces(text));
    if (it == index_.end()) {
      throw ParseError("'" + std::string(text) + "' is not an element of " + name_);
    }
    return it->second;
  }
  std::string poly_variable() const { return "x"; }

  const std::vector<Elem>& add_table() const noexcept { return add_; }
  const std::vector<Elem>& mul_table() const noexcept { return mul_; }
  const std::vector<std::string>& reprs() const noexcept { return reprs_; }
  const Construction& construction() const noexcept { return construction_; }

 private:
  void check_index(Elem v) const {
    if (v >= n_) throw UnsupportedSpec("ring '" + name_ + "': table entry out of range");
  }

  std::string triple(Elem a, Elem b, Elem c) const {
    return "(" + reprs_[a] + ", " + reprs_[b] + ", " + reprs_[c] + ")";
  }

  void validate() {
    const auto n = static_cast<Elem>(n_);
    // Additive group.
    for (Elem a = 0; a < n; ++a) {
      if (add(0, a) != a || add(a, 0) != a) {
        throw AxiomViolation("additive identity is the first element", "(" + reprs_[a] + ")");
      }
      for (Elem b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) {
          throw AxiomViolation("addition is commutative", "(" + reprs_[a] + ", " + reprs_[b] + ")");
        }
        for (Elem c = 0; c < n; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) {
            throw AxiomViolation("addition is associative", triple(a, b, c));
          }
        }
      }
    }
    neg_.assign(n_, 0);
    for (Elem a = 0; a < n; ++a) {
      bool found = false;
      for (Elem b = 0; b < n && !found; ++b) {
        if (add(a, b) == 0) {
          neg_[a] = b;
          found = true;
        }
      }
      if (!found) throw AxiomViolation("additive inverses exist", "(" + reprs_[a] + ")");
    }
    // Multiplicative identity.
    bool have_one = false;
    for (Elem e = 0; e < n && !have_one; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        one_ = e;
        have_one = true;
      }
    }
    if (!have_one) throw AxiomViolation("multiplicative identity exists", "(none)");
    if (n_ > 1 && one_ == 0) throw AxiomViolation("one differs from zero", "(" + reprs_[0] + ")");
    commutative_ = true;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (mul(a, b) != mul(b, a)) commutative_ = false;
        for (Elem c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw AxiomViolation("multiplication is associative", triple(a, b, c));
          }
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            throw AxiomViolation("left distributivity", triple(a, b, c));
          }
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
            throw AxiomViolation("right distributivity", triple(a, b, c));
          }
        }
      }
    }
  }

  std::string name_;
  std::vector<std::string> reprs_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Construction construction_;
  std::unordered_map<std::string, Elem> index_;
  std::size_t n_ = 0;
  Elem one_ = 0;
  bool commutative_ = false;
};

namespace rings {

/// Tables given by the caller; `reprs[0]` must be the additive identity.
inline std::shared_ptr<const FiniteRing> from_tables(std::string name, std::vector<std::string> reprs,
                                                     std::vector<Elem> add, std::vector<Elem> mul,
                                                     std::size_t order_cap = kDefaultOrderCap) {
  return std::make_shared<const FiniteRing>(std::move(name), std::move(reprs), std::move(add),
                                            std::move(mul), Construction{}, order_cap);
}

/// Integers modulo n.
inline std::shared_ptr<const FiniteRing> zmod(std::size_t n, std::size_t order_cap = kDefaultOrderCap) {
  if (n < 1) throw UnsupportedSpec("zmod requires n >= 1");
  if (n > std::min(order_cap, kMaxOrder)) {
    throw UnsupportedSpec("zmod(" + std::to_string(n) + ") exceeds the order cap");
  }
  std::vector<std::string> reprs;
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    reprs.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  Construction c{"zmod", {}, n, {}};
  return std::make_shared<const FiniteRing>("Z" + std::to_string(n), std::move(reprs), std::move(add),
                                            std::move(mul), std::move(c), order_cap);
}

/// Mixed-radix decomposition used by product-like constructions: the first
/// component varies fastest.
inline std::vector<std::size_t> decompose(std::size_t index, const std::vector<std::size_t>& radices) {
  std::vector<std::size_t> digits(radices.size());
  for (std::size_t k = 0; k < radices.size(); ++k) {
    digits[k] = index % radices[k];
    index /= radices[k];
  }
  return digits;
}

inline std::size_t compose_index(const std::vector<std::size_t>& digits,
                                  const std::vector<std::size_t>& radices) {
  std::size_t index = 0;
  for (std::size_t k = radices.size(); k-- > 0;) index = index * radices[k] + digits[k];
  return index;
}

/// Direct product with componentwise operations; elements print as (a,b,...).
inline std::shared_ptr<const FiniteRing> direct_product(std::vector<std::shared_ptr<const FiniteRing>> factors,
                                                        std::size_t order_cap = kDefaultOrderCap) {
  if (factors.empty()) throw UnsupportedSpec("direct_product needs at least one factor");
  std::vector<std::size_t> radices;
  std::size_t n = 1;
  std::string name;
  for (const auto& f : factors) {
    radices.push_back(f->order());
    n *= f->order();
    if (n > std::min(order_cap, kMaxOrder)) throw UnsupportedSpec("direct_product exceeds the order cap");
    name += (name.empty() ? "" : "+") + f->name();
  }
  std::vector<std::string> reprs(n);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto da = decompose(a, radices);
    std::string r = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      r += (k ? "," : "") + factors[k]->repr(static_cast<Elem>(da[k]));
    }
    reprs[a] = r + ")";
    for (std::size_t b = 0; b < n; ++b) {
      auto db = decompose(b, radices);
      std::vector<std::size_t> s(radices.size()), p(radices.size());
      for (std::size_t k = 0; k < factors.size(); ++k) {
        s[k] = factors[k]->add(static_cast<Elem>(da[k]), static_cast<Elem>(db[k]));
        p[k] = factors[k]->mul(static_cast<Elem>(da[k]), static_cast<Elem>(db[k]));
      }
      add[a * n + b] = static_cast<Elem>(compose_index(s, radices));
      mul[a * n + b] = static_cast<Elem>(compose_index(p, radices));
    }
  }
  Construction c{"direct_product", std::move(factors), 0, {}};
  return std::make_shared<const FiniteRing>(name, std::move(reprs), std::move(add), std::move(mul),
                                            std::move(c), order_cap);
}

/// Matrices [[a, b], [0, a]] with a in `diag` and b in `offdiag`, multiplied as
/// (a,b)(c,d) = (ac, action(a)d + b action(c)). `action` is a unital ring
/// homomorphism diag -> offdiag given as a table. Elements print as [a,b].
inline std::shared_ptr<const FiniteRing> triangular2(std::shared_ptr<const FiniteRing> diag,
                                                     std::shared_ptr<const FiniteRing> offdiag,
                                                     std::vector<Elem> action,
                                                     std::size_t order_cap = kDefaultOrderCap) {
  const std::size_t nd = diag->order(), no = offdiag->order();
  if (action.size() != nd) throw UnsupportedSpec("triangular2: action table must cover the diagonal ring");
  for (Elem a = 0; a < nd; ++a) {
    if (action[a] >= no) throw UnsupportedSpec("triangular2: action image out of range");
    for (Elem b = 0; b < nd; ++b) {
      if (action[diag->add(a, b)] != offdiag->add(action[a], action[b]) ||
          action[diag->mul(a, b)] != offdiag->mul(action[a], action[b])) {
        throw UnsupportedSpec("triangular2: action is not a ring homomorphism at (" + diag->repr(a) + ", " +
                              diag->repr(b) + ")");
      }
    }
  }
  if (action[diag->one()] != offdiag->one()) throw UnsupportedSpec("triangular2: action must be unital");
  const std::size_t n = nd * no;
  if (n > std::min(order_cap, kMaxOrder)) throw UnsupportedSpec("triangular2 exceeds the order cap");
  const std::vector<std::size_t> radices{nd, no};
  std::vector<std::string> reprs(n);
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto dx = decompose(x, radices);
    const auto a = static_cast<Elem>(dx[0]), b = static_cast<Elem>(dx[1]);
    reprs[x] = "[" + diag->repr(a) + "," + offdiag->repr(b) + "]";
    for (std::size_t y = 0; y < n; ++y) {
      auto dy = decompose(y, radices);
      const auto c = static_cast<Elem>(dy[0]), d = static_cast<Elem>(dy[1]);
      add[x * n + y] =
          static_cast<Elem>(compose_index({diag->add(a, c), offdiag->add(b, d)}, radices));
      const Elem off = offdiag->add(offdiag->mul(action[a], d), offdiag->mul(b, action[c]));
      mul[x * n + y] = static_cast<Elem>(compose_index({diag->mul(a, c), off}, radices));
    }
  }
  std::string name = "T(" + diag->name() + "," + offdiag->name() + ")";
  Construction con{"triangular2", {std::move(diag), std::move(offdiag)}, 0, {}};
  return std::make_shared<const FiniteRing>(name, std::move(reprs), std::move(add), std::move(mul),
                                            std::move(con), order_cap);
}

/// The canonical action Z/n -> Z/m (m | n), k·1 -> k·1.
inline std::vector<Elem> canonical_action(const FiniteRing& diag, const FiniteRing& offdiag) {
  std::vector<Elem> action(diag.order(), 0);
  std::vector<bool> seen(diag.order(), false);
  Elem d = 0, o = 0;
  for (std::size_t k = 0; k < diag.order(); ++k) {
    if (seen[d]) break;
    seen[d] = true;
    action[d] = o;
    d = diag.add(d, diag.one());
    o = offdiag.add(o, offdiag.one());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw UnsupportedSpec("canonical action needs a diagonal ring generated additively by one");
  }
  return action;
}

/// Full upper-triangular matrices [[a, b], [0, c]] over `base`; elements print
/// as [a,b;c].
inline std::shared_ptr<const FiniteRing> upper_triangular2(std::shared_ptr<const FiniteRing> base,
                                                           std::size_t order_cap = kDefaultOrderCap) {
  const std::size_t m = base->order();
  const std::size_t n = m * m * m;
  if (n > std::min(order_cap, kMaxOrder)) throw UnsupportedSpec("upper_triangular2 exceeds the order cap");
  const std::vector<std::size_t> radices{m, m, m};
  std::vector<std::string> reprs(n);
  std::vector<Elem> add(n * n), mul(n * n);
  const FiniteRing& r = *base;
  for (std::size_t x = 0; x < n; ++x) {
    auto dx = decompose(x, radices);
    const auto a = static_cast<Elem>(dx[0]), b = static_cast<Elem>(dx[1]), c = static_cast<Elem>(dx[2]);
    reprs[x] = "[" + r.repr(a) + "," + r.repr(b) + ";" + r.repr(c) + "]";
    for (std::size_t y = 0; y < n; ++y) {
      auto dy = decompose(y, radices);
      const auto d = static_cast<Elem>(dy[0]), e = static_cast<Elem>(dy[1]), f = static_cast<Elem>(dy[2]);
      add[x * n + y] = static_cast<Elem>(compose_index({r.add(a, d), r.add(b, e), r.add(c, f)}, radices));
      // [a b; 0 c][d e; 0 f] = [ad, ae + bf; 0, cf]
      mul[x * n + y] = static_cast<Elem>(
          compose_index({r.mul(a, d), r.add(r.mul(a, e), r.mul(b, f)), r.mul(c, f)}, radices));
    }
  }
  std::string name = "UT2(" + base->name() + ")";
  Construction con{"upper_triangular2", {std::move(base)}, 0, {}};
  return std::make_shared<const FiniteRing>(name, std::move(reprs), std::move(add), std::move(mul),
                                            std::move(con), order_cap);
}

/// Z_p[t]/(modulus) for a prime p and a monic modulus (coefficients low degree
/// first, leading 1 included). Elements print as sums like 1+t or 2*t^2.
inline std::shared_ptr<const FiniteRing> zp_quotient(int p, std::vector<int> modulus,
                                                     std::size_t order_cap = kDefaultOrderCap) {
  if (p < 2) throw UnsupportedSpec("zp_quotient requires p >= 2");
  if (modulus.size() < 2) throw UnsupportedSpec("zp_quotient requires a modulus of degree >= 1");
  for (int& c : modulus) c = ((c % p) + p) % p;
  if (modulus.back() != 1) throw UnsupportedSpec("zp_quotient requires a monic modulus");
  const std::size_t deg = modulus.size() - 1;
  std::size_t n = 1;
  for (std::size_t k = 0; k < deg; ++k) {
    n *= static_cast<std::size_t>(p);
    if (n > std::min(order_cap, kMaxOrder)) throw UnsupportedSpec("zp_quotient exceeds the order cap");
  }
  const std::vector<std::size_t> radices(deg, static_cast<std::size_t>(p));
  auto digits_of = [&](std::size_t x) { return decompose(x, radices); };
  std::vector<std::string> reprs(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto d = digits_of(x);
    std::string s;
    for (std::size_t k = 0; k < deg; ++k) {
      if (d[k] == 0) continue;
      std::string term;
      if (k == 0) {
        term = std::to_string(d[k]);
      } else {
        term = (d[k] == 1 ? "" : std::to_string(d[k]) + "*") + "t" + (k == 1 ? "" : "^" + std::to_string(k));
      }
      s += (s.empty() ? "" : "+") + term;
    }
    reprs[x] = s.empty() ? "0" : s;
  }
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto a = digits_of(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto b = digits_of(y);
      std::vector<std::size_t> s(deg);
      for (std::size_t k = 0; k < deg; ++k) s[k] = (a[k] + b[k]) % p;
      add[x * n + y] = static_cast<Elem>(compose_index(s, radices));
      std::vector<long> prod(2 * deg, 0);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] += static_cast<long>(a[i] * b[j]);
      for (std::size_t k = 2 * deg; k-- > deg;) {
        const long c = prod[k] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) prod[k - deg + j] -= c * modulus[j];
      }
      std::vector<std::size_t> r(deg);
      for (std::size_t k = 0; k < deg; ++k) r[k] = static_cast<std::size_t>(((prod[k] % p) + p) % p);
      mul[x * n + y] = static_cast<Elem>(compose_index(r, radices));
    }
  }
  std::string name = "Z" + std::to_string(p) + "[t]/(";
  {
    std::string m;
    for (std::size_t k = modulus.size(); k-- > 0;) {
      if (modulus[k] == 0) continue;
      std::string term = k == 0 ? std::to_string(modulus[k])
                                : (modulus[k] == 1 ? "" : std::to_string(modulus[k]) + "*") + "t" +
                                      (k == 1 ? "" : "^" + std::to_string(k));
      m += (m.empty() ? "" : "+") + term;
    }
    name += m + ")";
  }
  Construction con{"zp_quotient", {}, static_cast<std::size_t>(p), modulus};
  return std::make_shared<const FiniteRing>(name, std::move(reprs), std::move(add), std::move(mul),
                                            std::move(con), order_cap);
}

}  // namespace rings

/// All idempotents e (e·e = e) in carrier order.
inline std::vector<Elem> enumerate_idempotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

}  // namespace orelab
