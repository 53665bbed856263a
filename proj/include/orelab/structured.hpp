#pragma once

// Infinite rings with exact arithmetic and decidable equality. They cannot be
// enumerated; exhaustive procedures run over a documented finite sample and
// report their verdicts as sampled.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// A polynomial over Z/2, bit k holding the coefficient of x^k.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly from_bits(std::uint64_t bits) {
    Gf2Poly p;
    if (bits) p.words_.push_back(bits);
    return p;
  }
  static Gf2Poly monomial(std::size_t k) {
    Gf2Poly p;
    p.words_.assign(k / 64 + 1, 0);
    p.words_.back() = std::uint64_t{1} << (k % 64);
    return p;
  }

  bool is_zero() const noexcept { return words_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept {
    if (words_.empty()) return -1;
    const std::uint64_t top = words_.back();
    return static_cast<long>((words_.size() - 1) * 64 + 63 - __builtin_clzll(top));
  }
  bool coefficient(std::size_t k) const noexcept {
    return k / 64 < words_.size() && ((words_[k / 64] >> (k % 64)) & 1u);
  }

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    r.words_.assign(std::max(a.words_.size(), b.words_.size()), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) r.words_[i] ^= a.words_[i];
    for (std::size_t i = 0; i < b.words_.size(); ++i) r.words_[i] ^= b.words_[i];
    r.normalize();
    return r;
  }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      for (unsigned bit = 0; bit < 64; ++bit) {
        if (!((a.words_[i] >> bit) & 1u)) continue;
        // r ^= b << (64 i + bit)
        for (std::size_t j = 0; j < b.words_.size(); ++j) {
          const std::uint64_t w = b.words_[j];
          r.words_[i + j] ^= w << bit;
          if (bit) r.words_[i + j + 1] ^= w >> (64 - bit);
        }
      }
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  /// Constant term: the value at 0.
  Gf2Poly at_zero() const { return from_bits(coefficient(0) ? 1 : 0); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (long k = 0; k <= degree(); ++k) {
      if (!coefficient(static_cast<std::size_t>(k))) continue;
      std::string term = k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k));
      s += (s.empty() ? "" : "+") + term;
    }
    return s;
  }

  /// Accepts sums of the terms 0, 1, x and x^k; repeated terms cancel.
  static Gf2Poly parse(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty Z2[x] element");
    Gf2Poly r;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t end = s.find('+', pos);
      if (end == std::string::npos) end = s.size();
      const std::string term = s.substr(pos, end - pos);
      if (term == "0") {
      } else if (term == "1") {
        r = r + from_bits(1);
      } else if (term == "x") {
        r = r + monomial(1);
      } else if (term.size() > 2 && term.rfind("x^", 0) == 0) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(term.substr(2), &used);
          if (used != term.size() - 2) throw ParseError("");
        } catch (...) {
          throw ParseError("bad Z2[x] term '" + term + "'");
        }
        r = r + monomial(k);
      } else {
        throw ParseError("bad Z2[x] term '" + term + "' in '" + std::string(text) + "'");
      }
      pos = end + 1;
    }
    return r;
  }

 private:
  void normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }
  std::vector<std::uint64_t> words_;
};

/// The polynomial ring Z2[x]. Its skew extensions use the variable y.
class Gf2PolyRing {
 public:
  using element = Gf2Poly;
  static constexpr bool enumerable = false;

  explicit Gf2PolyRing(std::size_t sample_degree = 3) : sample_degree_(sample_degree) {
    if (sample_degree_ > 12) throw UnsupportedSpec("Z2[x] sample degree above 12");
  }

  std::string name() const { return "Z2[x]"; }
  Gf2Poly zero() const { return {}; }
  Gf2Poly one() const { return Gf2Poly::from_bits(1); }
  Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b) const { return a + b; }
  Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) const { return a * b; }
  Gf2Poly neg(const Gf2Poly& a) const { return a; }
  bool equal(const Gf2Poly& a, const Gf2Poly& b) const { return a == b; }
  bool is_zero(const Gf2Poly& a) const { return a.is_zero(); }
  std::string repr(const Gf2Poly& a) const { return a.str(); }
  Gf2Poly parse(std::string_view text) const { return Gf2Poly::parse(text); }
  std::string poly_variable() const { return "y"; }

  /// Every polynomial of degree at most the sample degree, ordered by the
  /// integer value of the coefficient bits.
  std::vector<Gf2Poly> sample() const {
    std::vector<Gf2Poly> out;
    const std::uint64_t count = std::uint64_t{1} << (sample_degree_ + 1);
    for (std::uint64_t bits = 0; bits < count; ++bits) out.push_back(Gf2Poly::from_bits(bits));
    return out;
  }
  std::string sample_description() const {
    return "all polynomials of degree <= " + std::to_string(sample_degree_);
  }
  std::size_t sample_degree() const noexcept { return sample_degree_; }

 private:
  std::size_t sample_degree_;
};

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A matrix [[a, t], [0, a]] with a an integer and t a rational.
struct IntRatPair {
  BigInt a;
  BigRational t;
  friend bool operator==(const IntRatPair&, const IntRatPair&) = default;
};

/// The commutative ring {[[a, t], [0, a]] : a in Z, t in Q}. Elements print as
/// [a,t] with t written p or p/q.
class IntRatTriangularRing {
 public:
  using element = IntRatPair;
  static constexpr bool enumerable = false;

  /// The sample is {[a,t] : |a| <= height, t = p/q with |p| <= height, 1 <= q <= denominators}.
  explicit IntRatTriangularRing(int height = 2, int denominators = 2)
      : height_(height), denominators_(denominators) {
    if (height_ < 1 || denominators_ < 1 || height_ > 6 || denominators_ > 6) {
      throw UnsupportedSpec("integer/rational sample bounds must lie in [1, 6]");
    }
  }

  std::string name() const { return "T(Z,Q)"; }
  IntRatPair zero() const { return {0, 0}; }
  IntRatPair one() const { return {1, 0}; }
  IntRatPair add(const IntRatPair& x, const IntRatPair& y) const { return {x.a + y.a, x.t + y.t}; }
  IntRatPair mul(const IntRatPair& x, const IntRatPair& y) const {
    return {x.a * y.a, BigRational(x.a) * y.t + x.t * BigRational(y.a)};
  }
  IntRatPair neg(const IntRatPair& x) const { return {-x.a, -x.t}; }
  bool equal(const IntRatPair& x, const IntRatPair& y) const { return x == y; }
  bool is_zero(const IntRatPair& x) const { return x.a == 0 && x.t == 0; }
  std::string repr(const IntRatPair& x) const { return "[" + x.a.str() + "," + x.t.str() + "]"; }
  IntRatPair parse(std::string_view text) const {
    const std::string s = detail::strip_spaces(text);
    if (s.size() < 5 || s.front() != '[' || s.back() != ']') {
      throw ParseError("expected [a,t], got '" + std::string(text) + "'");
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected [a,t], got '" + std::string(text) + "'");
    try {
      IntRatPair out;
      out.a = BigInt(s.substr(1, comma - 1));
      const std::string t = s.substr(comma + 1, s.size() - comma - 2);
      const auto slash = t.find('/');
      if (slash == std::string::npos) {
        out.t = BigRational(BigInt(t));
      } else {
        const BigInt den(t.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator");
        out.t = BigRational(BigInt(t.substr(0, slash)), den);
      }
      return out;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("expected [a,t], got '" + std::string(text) + "'");
    }
  }
  std::string poly_variable() const { return "x"; }

  std::vector<IntRatPair> sample() const {
    std::vector<IntRatPair> out;
    std::vector<BigRational> ts;
    for (int q = 1; q <= denominators_; ++q) {
      for (int p = -height_; p <= height_; ++p) {
        BigRational t(p, q);
        if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
      }
    }
    std::sort(ts.begin(), ts.end());
    for (int a = -height_; a <= height_; ++a) {
      for (const auto& t : ts) out.push_back({a, t});
    }
    // Put zero first so bounded searches see it early.
    auto zero_it = std::find(out.begin(), out.end(), zero());
    std::rotate(out.begin(), zero_it, zero_it + 1);
    return out;
  }
  std::string sample_description() const {
    return "[a,p/q] with |a| <= " + std::to_string(height_) + ", |p| <= " + std::to_string(height_) +
           ", 1 <= q <= " + std::to_string(denominators_);
  }

 private:
  int height_;
  int denominators_;
};

}  // namespace orelab
