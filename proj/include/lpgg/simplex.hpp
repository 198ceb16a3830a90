#pragma once

#include <string>
#include <vector>

#include "lpgg/calculus.hpp"

namespace lpgg {

/// Point x = sum_i x_i a_i of R^{n+1}, with a flag for the convex null
/// simplex S_n^+ (sum x_i = 1, all x_i >= 0).
template <ScalarType S>
struct SimplexPoint {
  std::vector<S> coordinates;
  bool barycentric = false;
};

namespace detail {

template <ScalarType S>
bool is_barycentric_row(const std::vector<S>& x) {
  using traits = ScalarTraits<S>;
  S total = traits::zero();
  for (const auto& c : x) {
    if (traits::sign(c) < 0) return false;
    total += c;
  }
  return traits::equal(total, traits::one());
}

inline Integer factorial(int n) {
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace detail

template <ScalarType S>
SimplexPoint<S> make_simplex_point(const NullFrame<S>& frame, std::vector<S> coordinates) {
  if (static_cast<int>(coordinates.size()) != frame.size()) {
    throw DomainError("point has " + std::to_string(coordinates.size()) + " coordinates, frame has " +
                      std::to_string(frame.size()) + " vectors");
  }
  SimplexPoint<S> out{std::move(coordinates), false};
  out.barycentric = detail::is_barycentric_row(out.coordinates);
  return out;
}

template <ScalarType S>
Multivector<S> point_vector(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  return frame.vector_from(std::span<const S>(x.coordinates));
}

/// |x|^2 = x^2; for a positive frame this is sum_{i<j} x_i x_j.
template <ScalarType S>
S light_cone_square(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  Multivector<S> v = point_vector(frame, x);
  return (v * v).scalar_part();
}

/// Exact zero for exact backends, |x|^2 <= 1e-12 otherwise.
template <ScalarType S>
bool on_light_cone(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  using traits = ScalarTraits<S>;
  S sq = light_cone_square(frame, x);
  if constexpr (traits::exact) {
    return traits::is_zero(sq);
  } else {
    return std::abs(traits::to_double(sq)) <= kAbsoluteTolerance;
  }
}

template <ScalarType S>
S light_cone_norm(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  using traits = ScalarTraits<S>;
  S sq = light_cone_square(frame, x);
  if (traits::sign(sq) < 0) throw DomainError("|x|^2 < 0: point outside the light cone");
  return traits::sqrt(sq);
}

/// x_hat = x / |x|.
template <ScalarType S>
Multivector<S> unit(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  if (on_light_cone(frame, x)) throw DomainError("x_hat is undefined on the light cone (|x| = 0)");
  return point_vector(frame, x) / light_cone_norm(frame, x);
}

// ---------------------------------------------------------------------------
// Content

template <ScalarType S>
struct SimplexContent {
  Multivector<S> product;      // (1/n!) (a2-a1) ^ ... ^ (a_{n+1}-a1)
  Multivector<S> alternating;  // (1/n!) sum_i (-1)^{i+1} ^(frame without a_i)
  bool proportional = false;
  bool equal = false;
};

template <ScalarType S>
SimplexContent<S> content_null(const NullFrame<S>& frame) {
  using traits = ScalarTraits<S>;
  const int size = frame.size();
  const S scale = traits::from_rational(make_rational(Integer(1), detail::factorial(frame.n())));
  std::vector<Multivector<S>> diffs;
  for (int i = 1; i < size; ++i) diffs.push_back(frame[i] - frame[0]);
  SimplexContent<S> out;
  out.product = wedge_list(std::span<const Multivector<S>>(diffs), frame.context()) * scale;

  Multivector<S> alt(frame.context());
  for (int i = 0; i < size; ++i) {
    std::vector<Multivector<S>> rest;
    for (int j = 0; j < size; ++j)
      if (j != i) rest.push_back(frame[j]);
    Multivector<S> face = wedge_list(std::span<const Multivector<S>>(rest), frame.context());
    alt += (i % 2 == 0) ? face : -face;
  }
  // Proportionality first: both are n-vectors, compare on a common blade.
  if (!alt.is_zero()) {
    const auto& [blade, c] = *alt.terms().begin();
    S ratio = out.product.coefficient(blade) / c;
    out.proportional = alt * ratio == out.product;
  }
  out.alternating = alt * scale;
  out.equal = out.alternating == out.product;
  return out;
}

/// x ^ content, which is (1/n!) (sum x_i) a1 ^ ... ^ a_{n+1}.
template <ScalarType S>
Multivector<S> content_wedge(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  return outer_product(point_vector(frame, x), content_null(frame).product);
}

/// x . content; emitted as data only.
template <ScalarType S>
Multivector<S> content_dot(const NullFrame<S>& frame, const SimplexPoint<S>& x) {
  return dot(point_vector(frame, x), content_null(frame).product);
}

/// (1/n!) a1 ^ ... ^ a_{n+1}.
template <ScalarType S>
Multivector<S> scaled_frame_volume(const NullFrame<S>& frame) {
  using traits = ScalarTraits<S>;
  return wedge_list(frame.vectors()) * traits::from_rational(make_rational(Integer(1), detail::factorial(frame.n())));
}

// ---------------------------------------------------------------------------
// Vertex sets

/// Rows are null-frame coordinates of the vertices v1..v_{m+1}.
template <ScalarType S>
class SimplicialMatrix {
 public:
  SimplicialMatrix(const NullFrame<S>& frame, std::vector<std::vector<S>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("a simplicial matrix needs at least one vertex");
    for (const auto& r : rows_) {
      if (static_cast<int>(r.size()) != frame.size()) throw DomainError("vertex row length does not match frame");
    }
    barycentric_ = true;
    for (const auto& r : rows_) barycentric_ = barycentric_ && detail::is_barycentric_row(r);
    for (const auto& r : rows_) vertices_.push_back(frame.vector_from(std::span<const S>(r)));
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  const std::vector<S>& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<Multivector<S>>& vertices() const noexcept { return vertices_; }
  bool barycentric() const noexcept { return barycentric_; }

  Matrix<S> matrix() const {
    Matrix<S> m(rows_.size(), rows_.front().size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) m(i, j) = rows_[i][j];
    return m;
  }

 private:
  std::vector<std::vector<S>> rows_;
  std::vector<Multivector<S>> vertices_;
  bool barycentric_ = false;
};

template <ScalarType S>
struct VertexContent {
  Multivector<S> value;
  bool degenerate = false;
};

/// (v2-v1) ^ ... ^ (v_{m+1}-v1); zero is reported as degenerate.
template <ScalarType S>
VertexContent<S> content_vertices(const SimplicialMatrix<S>& v) {
  const auto& vs = v.vertices();
  std::vector<Multivector<S>> diffs;
  for (std::size_t i = 1; i < vs.size(); ++i) diffs.push_back(vs[i] - vs[0]);
  VertexContent<S> out;
  out.value = wedge_list(std::span<const Multivector<S>>(diffs), vs.front().context());
  out.degenerate = out.value.is_zero();
  return out;
}

/// Closed when the dual sums sum_{j != i} v_j add to zero.
template <ScalarType S>
bool is_closed(const SimplicialMatrix<S>& v) {
  const auto& vs = v.vertices();
  if (vs.size() < 2) throw DomainError("closedness needs at least two vertices");
  Multivector<S> total(vs.front().context());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (j != i) total += vs[j];
  return total.is_zero();
}

/// Largest r such that some r vertices wedge to a nonzero r-vector.
template <ScalarType S>
int order(const SimplicialMatrix<S>& v) {
  const auto& vs = v.vertices();
  const int m = static_cast<int>(vs.size());
  if (m > 20) throw DimensionLimitError("order is computed by subset search, limited to 20 vertices");
  int best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    int r = std::popcount(mask);
    if (r <= best) continue;
    std::vector<Multivector<S>> pick;
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint32_t{1} << i)) pick.push_back(vs[i]);
    if (!wedge_list(pick).is_zero()) best = r;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Laplacian on the simplex

/// The simplex Laplacian checks under one index convention: sums over all
/// n+1 frame vectors, or over the first n only (a frame of size n).
struct LaplacianConvention {
  std::string name;
  int frame_size = 0;
  std::vector<IdentityLine> lines;
  Check scalar_valued;
};

template <ScalarType S = Radical>
std::vector<LaplacianConvention> simplex_laplacian_report(int n) {
  using traits = ScalarTraits<S>;
  if (n < 2) throw DomainError("the simplex Laplacian report needs n >= 2");
  const long c2 = static_cast<long>(n) * (n - 1) / 2;
  std::vector<LaplacianConvention> out;
  for (int size : {n + 1, n}) {
    auto frame = build_null_frame<S>(size, 1);
    const AlgebraContext& ctx = frame.context();
    const Multivector<S> one(ctx, traits::one());
    LaplacianConvention conv;
    conv.frame_size = size;
    conv.name = size == n + 1 ? "sums over i = 1..n+1" : "sums over i = 1..n";
    auto dual = make_dual_nabla(frame);
    auto lap = square(dual);
    auto x = PolyField<S>::position(frame);
    std::vector<S> origin(static_cast<std::size_t>(size), traits::zero());
    auto constant = [&](const PolyField<S>& f) { return f.evaluate(std::span<const S>(origin)); };

    conv.lines.push_back(detail::value_line("∨∇x = n(n−1)/2", constant(apply(dual, x)), {one}, {Rational(c2)}));
    conv.lines.push_back(detail::operator_line("∨∇² = Σ∂i² + C(n,2)Σ_{i≤j}∂i∂j", lap,
                                               {make_pure_second(frame), make_mixed_second(frame)},
                                               {Rational(1 + c2), Rational(c2)}));
    if (n == 3) {
      conv.lines.push_back(detail::operator_line("∨∇² = ∂1²+∂2²+∂3²+∂2∂3+∂1∂3+∂1∂2 (n = 3)", lap,
                                                 {make_pure_second(frame), make_mixed_second(frame)},
                                                 {Rational(1), Rational(1)}));
    }
    conv.lines.push_back(
        detail::value_line("∨∇²x² = C(n,2)²", constant(apply(lap, x * x)), {one}, {Rational(c2 * c2)}));

    bool scalar = true;
    for (const auto& [key, c] : lap.flatten()) scalar = scalar && key.second == 0;
    conv.scalar_valued = make_check("laplacian-scalar-valued", "∨∇² is scalar valued", scalar,
                                    "frame size " + std::to_string(size));
    out.push_back(std::move(conv));
  }
  return out;
}

}  // namespace lpgg
