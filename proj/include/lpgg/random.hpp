#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "lpgg/null_frame.hpp"

namespace lpgg {

/// Seeded source of small random rationals and the values built from them.
/// Identical seeds give identical sequences on every platform: bounded
/// integers come from raw mt19937_64 output by rejection, not from the
/// implementation-defined std distributions.
class RandomSource {
 public:
  explicit RandomSource(unsigned long long seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<long>(draw % span);
  }

  /// p/q with |p| <= numerator_bound, 1 <= q <= denominator_bound.
  Rational rational(long numerator_bound = 9, long denominator_bound = 4) {
    long p = integer(-numerator_bound, numerator_bound);
    long q = integer(1, denominator_bound);
    return make_rational(p, q);
  }

  Rational nonzero_rational(long numerator_bound = 9, long denominator_bound = 4) {
    Rational r;
    do {
      r = rational(numerator_bound, denominator_bound);
    } while (r == 0);
    return r;
  }

  /// Each blade present with probability `density`.
  template <ScalarType S>
  Multivector<S> multivector(const AlgebraContext& ctx, double density = 0.5) {
    Multivector<S> out(ctx);
    const long threshold = static_cast<long>(density * 1000.0);
    for (Blade b = 0; b < ctx.blade_count(); ++b) {
      if (integer(0, 999) < threshold) out.add(b, ScalarTraits<S>::from_rational(rational()));
    }
    return out;
  }

  /// sum_i x_i a_i with random rational x_i.
  template <ScalarType S>
  Multivector<S> frame_vector(const NullFrame<S>& frame) {
    auto x = coordinates<S>(frame.size());
    return frame.vector_from(std::span<const S>(x));
  }

  template <ScalarType S>
  std::vector<S> coordinates(int count) {
    std::vector<S> out;
    for (int i = 0; i < count; ++i) out.push_back(ScalarTraits<S>::from_rational(rational()));
    return out;
  }

  /// Barycentric coordinates w_i / sum w with integer weights in [0, 9];
  /// with `interior` every weight is at least 1.
  std::vector<Rational> barycentric(int count, bool interior = false) {
    std::vector<long> w(static_cast<std::size_t>(count));
    long total = 0;
    do {
      total = 0;
      for (auto& x : w) {
        x = integer(interior ? 1 : 0, 9);
        total += x;
      }
    } while (total == 0);
    std::vector<Rational> out;
    for (long x : w) out.push_back(make_rational(x, total));
    return out;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lpgg
