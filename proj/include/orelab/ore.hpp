#pragma once

// Arithmetic in the Ore extension R[x; σ, δ], where x·a = σ(a)x + δ(a).
//
// x^n·a expands as Σ_i f_i^n(a) x^i, f_i^n being the sum of all words in σ and
// δ with i letters σ and n−i letters δ. Two independent routes compute it:
// iterating the base rule one power of x at a time, and summing the word
// actions directly. The first is the default for multiplication; the second
// exists so the two can be checked against each other.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/morphism.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// Polynomial degree with a distinguished −∞ for the zero polynomial.
class Degree {
 public:
  static constexpr Degree neg_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : value_(d) {}

  constexpr bool is_neg_infinity() const noexcept { return !value_.has_value(); }
  constexpr std::size_t value() const {
    if (!value_) throw IndexOutOfRange("degree of the zero polynomial has no value");
    return *value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
    return Degree(*a.value_ + *b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) {
      return static_cast<int>(!a.is_neg_infinity()) <=> static_cast<int>(!b.is_neg_infinity());
    }
    return *a.value_ <=> *b.value_;
  }

  std::string str() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

enum class Letter : std::uint8_t { sigma, delta };

/// Calls `visit(word)` once for every word of length n with exactly i letters
/// σ, in lexicographic order (σ < δ). Returns the number of words emitted.
inline std::size_t for_each_word(std::size_t n, std::size_t i,
                                 const std::function<void(const std::vector<Letter>&)>& visit) {
  if (i > n) throw IndexOutOfRange("word with " + std::to_string(i) + " sigma letters but length " + std::to_string(n));
  std::vector<Letter> word(n, Letter::delta);
  std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i), Letter::sigma);
  std::size_t count = 0;
  do {
    visit(word);
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

template <Ring R>
class OreExtension;

/// A polynomial Σ a_i x^i over R, tied to the extension that created it.
/// Trailing zero coefficients are always stripped.
template <Ring R>
class SkewPolynomial {
 public:
  using element = typename R::element;

  const std::vector<element>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
  }
  /// Coefficient of x^k; zero beyond the degree.
  element coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }
  std::uint64_t context_id() const noexcept { return context_; }

 private:
  friend class OreExtension<R>;
  SkewPolynomial(std::uint64_t context, std::vector<element> coeffs, element zero)
      : context_(context), coeffs_(std::move(coeffs)), zero_(std::move(zero)) {}

  std::uint64_t context_;
  std::vector<element> coeffs_;
  element zero_;
};

namespace detail {
inline std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace detail

/// The ring R[x; σ, δ]. Copies share a context, so polynomials made by one copy
/// are accepted by the others.
template <Ring R>
class OreExtension {
 public:
  using element = typename R::element;
  using Poly = SkewPolynomial<R>;

  explicit OreExtension(Derivation<R> delta)
      : delta_(std::move(delta)), ring_(delta_.sigma().ring_ptr()), id_(detail::next_context_id()) {}

  const R& ring() const noexcept { return *ring_; }
  const Endomorphism<R>& sigma() const noexcept { return delta_.sigma(); }
  const Derivation<R>& delta() const noexcept { return delta_; }
  std::uint64_t id() const noexcept { return id_; }
  std::string variable() const { return ring_->poly_variable(); }

  Poly make(std::vector<element> coeffs) const {
    while (!coeffs.empty() && ring_->is_zero(coeffs.back())) coeffs.pop_back();
    return Poly(id_, std::move(coeffs), ring_->zero());
  }
  Poly zero() const { return make({}); }
  Poly constant(const element& a) const { return make({a}); }
  /// a·x^k
  Poly monomial(const element& a, std::size_t k) const {
    std::vector<element> c(k + 1, ring_->zero());
    c[k] = a;
    return make(std::move(c));
  }

  /// x^n·a by iterating x·(Σ c_k x^k) = Σ σ(c_k) x^{k+1} + δ(c_k) x^k.
  Poly x_power_times(std::size_t n, const element& a) const {
    return make(x_power_times_raw(n, {a}));
  }

  /// f_i^n(a), summing the action of every word of length n with i letters σ.
  element word_map_apply(std::size_t n, std::size_t i, const element& a) const {
    if (i > n) throw IndexOutOfRange("f_i^n needs 0 <= i <= n, got i=" + std::to_string(i) + ", n=" + std::to_string(n));
    element sum = ring_->zero();
    for_each_word(n, i, [&](const std::vector<Letter>& word) {
      element v = a;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        v = (*it == Letter::sigma) ? sigma()(v) : delta_(v);
      }
      sum = ring_->add(sum, v);
    });
    return sum;
  }

  Poly add(const Poly& p, const Poly& q) const {
    check(p);
    check(q);
    std::vector<element> c(std::max(p.coeffs().size(), q.coeffs().size()), ring_->zero());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = ring_->add(p.coefficient(k), q.coefficient(k));
    return make(std::move(c));
  }
  Poly neg(const Poly& p) const {
    check(p);
    std::vector<element> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(ring_->neg(a));
    return make(std::move(c));
  }
  Poly sub(const Poly& p, const Poly& q) const { return add(p, neg(q)); }
  bool equal(const Poly& p, const Poly& q) const {
    check(p);
    check(q);
    if (p.coeffs().size() != q.coeffs().size()) return false;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (!ring_->equal(p.coeffs()[k], q.coeffs()[k])) return false;
    }
    return true;
  }

  /// Ore product via the iterated base rule: p·q = Σ_i a_i (x^i q).
  Poly mul(const Poly& p, const Poly& q) const {
    check(p);
    check(q);
    if (p.is_zero() || q.is_zero()) return zero();
    const std::size_t n = p.coeffs().size() - 1, m = q.coeffs().size() - 1;
    std::vector<element> out(n + m + 1, ring_->zero());
    std::vector<element> shifted = q.coeffs();  // x^i·q
    for (std::size_t i = 0; i <= n; ++i) {
      if (i > 0) shifted = times_x(shifted);
      const element& a = p.coeffs()[i];
      if (ring_->is_zero(a)) continue;
      for (std::size_t k = 0; k < shifted.size(); ++k) out[k] = ring_->add(out[k], ring_->mul(a, shifted[k]));
    }
    return make(std::move(out));
  }

  /// Ore product via the closed form p·q = Σ_{i,k} Σ_j a_i f_j^i(b_k) x^{j+k},
  /// with every f_j^i evaluated word by word.
  Poly mul_by_words(const Poly& p, const Poly& q) const {
    check(p);
    check(q);
    if (p.is_zero() || q.is_zero()) return zero();
    const std::size_t n = p.coeffs().size() - 1, m = q.coeffs().size() - 1;
    std::vector<element> out(n + m + 1, ring_->zero());
    for (std::size_t i = 0; i <= n; ++i) {
      const element& a = p.coeffs()[i];
      if (ring_->is_zero(a)) continue;
      for (std::size_t k = 0; k <= m; ++k) {
        for (std::size_t j = 0; j <= i; ++j) {
          out[j + k] = ring_->add(out[j + k], ring_->mul(a, word_map_apply(i, j, q.coeffs()[k])));
        }
      }
    }
    return make(std::move(out));
  }

  /// Canonical text: terms (c)*x^i joined by " + ", constant term first;
  /// "0" for the zero polynomial.
  std::string format(const Poly& p) const {
    check(p);
    if (p.is_zero()) return "0";
    std::string s;
    const std::string var = variable();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (ring_->is_zero(p.coeffs()[k])) continue;
      std::string term = "(" + std::string(ring_->repr(p.coeffs()[k])) + ")";
      if (k == 1) term += "*" + var;
      if (k > 1) term += "*" + var + "^" + std::to_string(k);
      s += (s.empty() ? "" : " + ") + term;
    }
    return s;
  }

  /// Inverse of `format`. Whitespace is ignored; a power may appear more than
  /// once, in which case the coefficients are added.
  Poly parse(std::string_view text) const {
    const std::string s = detail::strip_spaces(text);
    if (s == "0") return zero();
    const std::string var = variable();
    std::vector<element> coeffs;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
      throw ParseError("polynomial '" + std::string(text) + "': " + why + " at offset " + std::to_string(pos));
    };
    while (pos < s.size()) {
      if (s[pos] != '(') fail("expected '('");
      int depth = 0;
      std::size_t close = pos;
      for (; close < s.size(); ++close) {
        if (s[close] == '(') ++depth;
        if (s[close] == ')' && --depth == 0) break;
      }
      if (close == s.size()) fail("unbalanced parentheses");
      const element c = ring_->parse(std::string_view(s).substr(pos + 1, close - pos - 1));
      pos = close + 1;
      std::size_t power = 0;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (s.compare(pos, var.size(), var) != 0) fail("expected variable " + var);
        pos += var.size();
        power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t end = pos;
          while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
          if (end == pos) fail("expected exponent");
          power = std::stoul(s.substr(pos, end - pos));
          pos = end;
        }
      }
      if (coeffs.size() <= power) coeffs.resize(power + 1, ring_->zero());
      coeffs[power] = ring_->add(coeffs[power], c);
      if (pos < s.size()) {
        if (s[pos] != '+') fail("expected '+'");
        ++pos;
        if (pos == s.size()) fail("dangling '+'");
      }
    }
    if (coeffs.empty()) fail("empty polynomial");
    return make(std::move(coeffs));
  }

  /// Multiplies the coefficient list c (of Σ c_k x^k) on the left by x.
  std::vector<element> times_x(const std::vector<element>& c) const {
    std::vector<element> out(c.size() + 1, ring_->zero());
    for (std::size_t k = 0; k < c.size(); ++k) {
      out[k + 1] = ring_->add(out[k + 1], sigma()(c[k]));
      out[k] = ring_->add(out[k], delta_(c[k]));
    }
    return out;
  }

 private:
  std::vector<element> x_power_times_raw(std::size_t n, std::vector<element> c) const {
    for (std::size_t i = 0; i < n; ++i) c = times_x(c);
    return c;
  }

  void check(const Poly& p) const {
    if (p.context_id() != id_) throw ContextMismatch("polynomial belongs to a different Ore extension");
  }

  Derivation<R> delta_;
  std::shared_ptr<const R> ring_;
  std::uint64_t id_;
};

}  // namespace orelab
