#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "lpgg/errors.hpp"

namespace lpgg {

/// Bitmask naming a basis blade: bit k set means generator k is a factor.
/// Generators are ordered e1..ep, f1..fq.
using Blade = std::uint32_t;

inline constexpr int kMaxDimension = 12;

inline int grade(Blade b) noexcept { return std::popcount(b); }

/// Signature (p, q) of a real geometric algebra G(p,q).
class AlgebraContext {
 public:
  AlgebraContext() = default;
  AlgebraContext(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw DomainError("signature counts must be nonnegative");
    if (p + q > kMaxDimension) {
      throw DimensionLimitError("G(" + std::to_string(p) + "," + std::to_string(q) +
                                ") exceeds the dense limit p+q <= " + std::to_string(kMaxDimension));
    }
  }

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int dimension() const noexcept { return p_ + q_; }
  std::size_t blade_count() const noexcept { return std::size_t{1} << dimension(); }
  Blade pseudoscalar() const noexcept { return static_cast<Blade>(blade_count() - 1); }

  /// Mask of generators squaring to -1.
  Blade negative_mask() const noexcept { return static_cast<Blade>(((Blade{1} << q_) - 1) << p_); }
  int generator_square(int index) const noexcept { return index < p_ ? 1 : -1; }

  std::string generator_name(int index) const {
    return index < p_ ? "e" + std::to_string(index + 1) : "f" + std::to_string(index - p_ + 1);
  }

  /// "1" for the scalar blade, otherwise generators joined by '^'.
  std::string blade_name(Blade b) const {
    if (b == 0) return "1";
    std::string out;
    for (int k = 0; k < dimension(); ++k) {
      if (b & (Blade{1} << k)) {
        if (!out.empty()) out += '^';
        out += generator_name(k);
      }
    }
    return out;
  }

  /// Index of a generator name ("e2", "f1"), or -1.
  int generator_index(const std::string& name) const {
    if (name.size() < 2 || (name[0] != 'e' && name[0] != 'f')) return -1;
    int k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      k = k * 10 + (name[i] - '0');
      if (k > kMaxDimension) return -1;
    }
    if (k < 1) return -1;
    if (name[0] == 'e') return k <= p_ ? k - 1 : -1;
    return k <= q_ ? p_ + k - 1 : -1;
  }

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;

  std::string to_string() const { return "G(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

 private:
  int p_ = 0;
  int q_ = 0;
};

inline AlgebraContext make_algebra(int p, int q) { return AlgebraContext(p, q); }

/// Sign of moving every factor of b past the factors of a into canonical order.
inline int reorder_sign(Blade a, Blade b) noexcept {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// blade(a) * blade(b) = blade_product_sign(ctx, a, b) * blade(a ^ b).
inline int blade_product_sign(const AlgebraContext& ctx, Blade a, Blade b) noexcept {
  int sign = reorder_sign(a, b);
  if (std::popcount(a & b & ctx.negative_mask()) & 1) sign = -sign;
  return sign;
}

}  // namespace lpgg
