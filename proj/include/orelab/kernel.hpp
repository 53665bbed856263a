#pragma once

// Bulk skew-polynomial multiplication on raw coefficient arrays, for the
// bounded searches that multiply millions of small polynomials. Arrays may
// carry trailing zeros; a product of arrays of lengths L1 and L2 has length
// L1 + L2 - 1.

#include <span>
#include <string>
#include <vector>

#include "orelab/errors.hpp"
#include "orelab/ore.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// Generic kernel: delegates to OreExtension. Used for structured rings, where
/// searches run over small samples.
template <Ring R>
class PolyKernel {
 public:
  using element = typename R::element;

  explicit PolyKernel(OreExtension<R> ext, std::size_t /*max_shift*/ = 0) : ext_(std::move(ext)) {}

  const OreExtension<R>& extension() const noexcept { return ext_; }
  const R& ring() const noexcept { return ext_.ring(); }

  void mul(std::span<const element> f, std::span<const element> g, std::vector<element>& out) const {
    const auto p = ext_.mul(ext_.make({f.begin(), f.end()}), ext_.make({g.begin(), g.end()}));
    out.assign(f.size() + g.size() - 1, ring().zero());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k] = p.coeffs()[k];
  }

  /// f_l^i(b), the coefficient of x^l in x^i·b.
  element shift(std::size_t i, std::size_t l, const element& b) const {
    return ext_.x_power_times(i, b).coefficient(l);
  }
  element sigma_power(std::size_t i, const element& b) const { return ext_.sigma().power(i, b); }

  std::string format(std::span<const element> f) const { return ext_.format(ext_.make({f.begin(), f.end()})); }

 private:
  OreExtension<R> ext_;
};

/// Table-driven kernel for finite rings. x^i·b is tabulated for every element b
/// and every i up to `max_shift`, using the iterated base rule.
template <>
class PolyKernel<FiniteRing> {
 public:
  using element = Elem;

  explicit PolyKernel(OreExtension<FiniteRing> ext, std::size_t max_shift = 8)
      : ext_(std::move(ext)), n_(ext_.ring().order()), stride_(max_shift + 1), max_shift_(max_shift) {
    const FiniteRing& r = ext_.ring();
    add_ = r.add_table();
    mul_ = r.mul_table();
    shifts_.assign(stride_ * stride_ * n_, 0);
    for (Elem b = 0; b < n_; ++b) {
      std::vector<Elem> c{b};
      for (std::size_t i = 0; i <= max_shift_; ++i) {
        if (i > 0) c = ext_.times_x(c);
        for (std::size_t l = 0; l < c.size(); ++l) shifts_[(i * stride_ + l) * n_ + b] = c[l];
      }
    }
  }

  const OreExtension<FiniteRing>& extension() const noexcept { return ext_; }
  const FiniteRing& ring() const noexcept { return ext_.ring(); }
  std::size_t max_shift() const noexcept { return max_shift_; }

  void mul(std::span<const Elem> f, std::span<const Elem> g, std::vector<Elem>& out) const {
    if (f.size() > stride_) throw IndexOutOfRange("kernel tabulates x^i b only up to i=" + std::to_string(max_shift_));
    out.assign(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Elem a = f[i];
      if (a == 0) continue;
      const Elem* row = mul_.data() + static_cast<std::size_t>(a) * n_;
      for (std::size_t k = 0; k < g.size(); ++k) {
        const Elem b = g[k];
        if (b == 0) continue;
        for (std::size_t l = 0; l <= i; ++l) {
          const Elem c = shifts_[(i * stride_ + l) * n_ + b];
          if (c == 0) continue;
          Elem& slot = out[l + k];
          slot = add_[static_cast<std::size_t>(slot) * n_ + row[c]];
        }
      }
    }
  }

  Elem shift(std::size_t i, std::size_t l, Elem b) const {
    if (i > max_shift_ || l > i) throw IndexOutOfRange("shift table index out of range");
    return shifts_[(i * stride_ + l) * n_ + b];
  }
  Elem sigma_power(std::size_t i, Elem b) const { return shift(i, i, b); }

  std::string format(std::span<const Elem> f) const { return ext_.format(ext_.make({f.begin(), f.end()})); }

 private:
  OreExtension<FiniteRing> ext_;
  std::size_t n_;
  std::size_t stride_;
  std::size_t max_shift_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> shifts_;
};

}  // namespace orelab
