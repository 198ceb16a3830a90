#pragma once

#include <array>
#include <complex>
#include <vector>

#include "lpgg/star.hpp"

namespace lpgg {

namespace detail {

template <ScalarType S>
void require_frame_size(const NullFrame<S>& frame, int size, const char* what) {
  if (frame.size() != size) {
    throw ContextMismatchError(std::string(what) + " needs a frame with n+1 = " + std::to_string(size));
  }
}

template <ScalarType S>
void require_vector(const Multivector<S>& v, const char* what) {
  if (!v.has_only_grades({1}) && !v.is_zero()) throw DomainError(std::string(what) + " expects a vector");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Endomorphisms of R^2 and R^3

/// f(x) = 2 (v1 ^ v2) x on a frame with n+1 = 2.
template <ScalarType S>
Multivector<S> wedge_endo_2d(const NullFrame<S>& frame, const Multivector<S>& v1, const Multivector<S>& v2,
                             const Multivector<S>& x) {
  detail::require_frame_size(frame, 2, "wedge_endo_2d");
  Multivector<S> probe(frame.context());
  probe.require_same(v1);
  probe.require_same(v2);
  probe.require_same(x);
  for (const auto* v : {&v1, &v2, &x}) detail::require_vector(*v, "wedge_endo_2d");
  return outer_product(v1, v2) * x * ScalarTraits<S>::from_rational(Rational(2));
}

/// The expanded form 2((x.v2) v1 - (x.v1) v2).
template <ScalarType S>
Multivector<S> wedge_endo_2d_expanded(const Multivector<S>& v1, const Multivector<S>& v2, const Multivector<S>& x) {
  const S two = ScalarTraits<S>::from_rational(Rational(2));
  return (v1 * scalar_product(x, v2) - v2 * scalar_product(x, v1)) * two;
}

/// v11 v22 - v12 v21 for v_i = v_i1 a1 + v_i2 a2.
template <ScalarType S>
S frame_determinant_2d(const NullFrame<S>& frame, const Multivector<S>& v1, const Multivector<S>& v2) {
  auto c1 = frame.coordinates_of(v1);
  auto c2 = frame.coordinates_of(v2);
  return c1[0] * c2[1] - c1[1] * c2[0];
}

/// f^2(x) - 2 (f(x).v2) v1 + 2 (f(x).v1) v2; identically zero.
template <ScalarType S>
Multivector<S> cayley_grassmann_residual(const NullFrame<S>& frame, const Multivector<S>& v1,
                                         const Multivector<S>& v2, const Multivector<S>& x) {
  const S two = ScalarTraits<S>::from_rational(Rational(2));
  Multivector<S> fx = wedge_endo_2d(frame, v1, v2, x);
  Multivector<S> ffx = wedge_endo_2d(frame, v1, v2, fx);
  return ffx - v1 * (two * scalar_product(fx, v2)) + v2 * (two * scalar_product(fx, v1));
}

/// Projective coordinates of x relative to v1, v2: the scalars
/// (x ^ v2)/(v1 ^ v2) and (x ^ v1)/(v1 ^ v2), with x = c1 v1 - c2 v2.
template <ScalarType S>
struct ProjectiveCoordinates {
  S c1;
  S c2;
  bool reconstructs = false;
};

template <ScalarType S>
ProjectiveCoordinates<S> projective_coordinates(const NullFrame<S>& frame, const Multivector<S>& v1,
                                                const Multivector<S>& v2, const Multivector<S>& x) {
  detail::require_frame_size(frame, 2, "projective_coordinates");
  const Blade top = frame.context().pseudoscalar();
  S denom = outer_product(v1, v2).coefficient(top);
  if (ScalarTraits<S>::is_zero(denom)) throw DomainError("v1 ^ v2 = 0: no projective coordinates");
  ProjectiveCoordinates<S> out{outer_product(x, v2).coefficient(top) / denom,
                               outer_product(x, v1).coefficient(top) / denom};
  out.reconstructs = (v1 * out.c1 - v2 * out.c2) == x;
  return out;
}

/// 2 (a1 ^ a2 ^ a3) x on the n+1 = 3 frame, with the result's coordinates
/// on the bivectors a1^a2, a2^a3, a3^a1.
template <ScalarType S>
struct PseudoscalarEndo {
  Multivector<S> value;
  std::array<S, 3> bivector_coordinates;  // a1^a2, a2^a3, a3^a1
  Multivector<S> minus_i_x;                // -(e1 f1 f2) x
};

template <ScalarType S>
std::array<Multivector<S>, 3> frame_bivectors(const NullFrame<S>& frame) {
  detail::require_frame_size(frame, 3, "frame_bivectors");
  return {outer_product(frame[0], frame[1]), outer_product(frame[1], frame[2]), outer_product(frame[2], frame[0])};
}

/// Coordinates of a bivector on a1^a2, a2^a3, a3^a1.
template <ScalarType S>
std::array<S, 3> bivector_coordinates(const NullFrame<S>& frame, const Multivector<S>& b) {
  auto basis = frame_bivectors(frame);
  std::vector<Blade> blades;
  for (Blade k = 0; k < frame.context().blade_count(); ++k)
    if (grade(k) == 2) blades.push_back(k);
  Matrix<S> m(blades.size(), 3);
  std::vector<S> rhs;
  for (std::size_t r = 0; r < blades.size(); ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = basis[c].coefficient(blades[r]);
    rhs.push_back(b.coefficient(blades[r]));
  }
  Multivector<S> rest = b - grade_projection(b, 2);
  auto x = solve_consistent(m, rhs);
  if (!x || !rest.is_zero()) throw DomainError("not a bivector");
  return {(*x)[0], (*x)[1], (*x)[2]};
}

template <ScalarType S>
PseudoscalarEndo<S> pseudoscalar_endo_3d(const NullFrame<S>& frame, const Multivector<S>& x) {
  detail::require_frame_size(frame, 3, "pseudoscalar_endo_3d");
  detail::require_vector(x, "pseudoscalar_endo_3d");
  const AlgebraContext& ctx = frame.context();
  PseudoscalarEndo<S> out;
  out.value = wedge_list(frame.vectors()) * x * ScalarTraits<S>::from_rational(Rational(2));
  out.bivector_coordinates = bivector_coordinates(frame, out.value);
  out.minus_i_x = -(Multivector<S>::blade(ctx, ctx.pseudoscalar()) * x);
  return out;
}

// ---------------------------------------------------------------------------
// Scalar-plus-bivector operators on the n+1 = 3 frame

template <ScalarType S>
class BivectorOperator {
 public:
  /// g(i, j) for i != j; the diagonal is ignored.
  BivectorOperator(const NullFrame<S>& frame, const Matrix<S>& g) : frame_(frame), g_(g) {
    detail::require_frame_size(frame, 3, "BivectorOperator");
    if (g.rows() != 3 || g.cols() != 3) throw DomainError("bivector operator needs a 3x3 coefficient matrix");
    for (int i = 0; i < 3; ++i) g_(i, i) = ScalarTraits<S>::zero();
  }

  const NullFrame<S>& frame() const noexcept { return frame_; }
  const S& g(int i, int j) const { return g_(i, j); }

  S trace() const {
    S t = ScalarTraits<S>::zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t += g_(i, j);
    return t;
  }
  S g1() const { return g_(1, 2) - g_(2, 1); }
  S g2() const { return g_(2, 0) - g_(0, 2); }
  S g3() const { return g_(0, 1) - g_(1, 0); }

  /// 1/2 tr(G) + g1 a2^a3 + g2 a3^a1 + g3 a1^a2.
  Multivector<S> element() const {
    auto b = frame_bivectors(frame_);
    Multivector<S> out(frame_.context(), trace() * ScalarTraits<S>::from_rational(make_rational(1, 2)));
    return out + b[1] * g1() + b[2] * g2() + b[0] * g3();
  }

  /// sum_{i != j} g_ij a_i a_j.
  Multivector<S> from_products() const { return from_coefficient_matrix(frame_, g_); }

  /// 4 <B^2>_0 with B = G - tr(G)/2, the discriminant of the minimal polynomial.
  S discriminant() const {
    Multivector<S> b = grade_projection(element(), 2);
    return (b * b).scalar_part() * ScalarTraits<S>::from_rational(Rational(4));
  }

  /// g1^2 + g2^2 + g3^2, the discriminant as it is usually written.
  S stated_discriminant() const { return g1() * g1() + g2() * g2() + g3() * g3(); }

 private:
  NullFrame<S> frame_;
  Matrix<S> g_;
};

template <ScalarType S>
struct SpectralDecomposition {
  S r_minus;
  S r_plus;
  Multivector<S> p1;
  Multivector<S> p2;
  S discriminant;
  S stated_discriminant;
};

/// G = r_- p1 + r_+ p2 with p1 = (-2G + tr + s)/(2s), p2 = (2G - tr + s)/(2s),
/// s = sqrt of the actual discriminant.
template <ScalarType S>
SpectralDecomposition<S> spectral_decompose(const BivectorOperator<S>& op) {
  using traits = ScalarTraits<S>;
  SpectralDecomposition<S> out;
  out.discriminant = op.discriminant();
  out.stated_discriminant = op.stated_discriminant();
  if (traits::equal(out.discriminant, traits::zero(), traits::magnitude(op.trace()))) {
    throw DomainError("degenerate spectrum: the discriminant of G vanishes");
  }
  const S s = traits::sqrt(out.discriminant);
  const S half = traits::from_rational(make_rational(1, 2));
  const S two = traits::from_rational(Rational(2));
  const S tr = op.trace();
  const Multivector<S> g = op.element();
  const AlgebraContext& ctx = op.frame().context();
  out.r_minus = (tr - s) * half;
  out.r_plus = (tr + s) * half;
  out.p1 = (g * (-two) + Multivector<S>(ctx, tr + s)) / (two * s);
  out.p2 = (g * two + Multivector<S>(ctx, s - tr)) / (two * s);
  return out;
}

/// phi(t) = (t - tr/2)^2 - D/4 evaluated at a multivector.
template <ScalarType S>
Multivector<S> minimal_polynomial(const BivectorOperator<S>& op, const Multivector<S>& t) {
  using traits = ScalarTraits<S>;
  const AlgebraContext& ctx = op.frame().context();
  Multivector<S> shifted = t - Multivector<S>(ctx, op.trace() * traits::from_rational(make_rational(1, 2)));
  return shifted * shifted - Multivector<S>(ctx, op.discriminant() * traits::from_rational(make_rational(1, 4)));
}

// ---------------------------------------------------------------------------
// Matrix representations

/// Left multiplication by mv in the blade basis: column b holds mv * e_b.
template <ScalarType S>
Matrix<S> regular_representation(const Multivector<S>& mv) {
  const AlgebraContext& ctx = mv.context();
  if (ctx.dimension() > 8) throw DimensionLimitError("regular representation limited to p+q <= 8");
  const std::size_t size = ctx.blade_count();
  Matrix<S> out(size, size);
  for (Blade b = 0; b < size; ++b) {
    Multivector<S> col = mv * Multivector<S>::blade(ctx, b);
    for (const auto& [k, c] : col.terms()) out(k, b) = c;
  }
  return out;
}

namespace detail {

inline void require_signature(const AlgebraContext& ctx, int p, int q) {
  if (ctx.p() != p || ctx.q() != q) {
    throw DomainError("expected an element of G(" + std::to_string(p) + "," + std::to_string(q) + "), got " +
                      ctx.to_string());
  }
}

}  // namespace detail

/// 2x2 matrix on the spectral basis [[a2 a1, a2], [a1, a1 a2]] of G(1,1):
/// M_ij = 2 <E_ii mv E_ji>_0.
template <ScalarType S>
Matrix<S> rep_g11(const Multivector<S>& mv) {
  using traits = ScalarTraits<S>;
  detail::require_signature(mv.context(), 1, 1);
  const auto f = build_null_frame<S>(2, 1);
  const auto& a1 = f[0];
  const auto& a2 = f[1];
  const std::array<std::array<Multivector<S>, 2>, 2> e{{{a2 * a1, a2}, {a1, a1 * a2}}};
  const S two = traits::from_rational(Rational(2));
  Matrix<S> out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = two * (e[i][i] * mv * e[j][i]).scalar_part();
  return out;
}

/// Complex 2x2 matrix of an element of G(1,2). With i = e1 f1 f2 central
/// and f2 = (e1 f1) i, every element is u + v i for u, v in G(1,1), and
/// maps to rep_g11(u) + i rep_g11(v).
template <ScalarType S>
Matrix<Complex> rep_g12(const Multivector<S>& mv) {
  detail::require_signature(mv.context(), 1, 2);
  const AlgebraContext g11(1, 1);
  constexpr Blade f2 = 0b100;
  Multivector<double> u(g11);
  Multivector<double> v(g11);
  const auto e1f1 = Multivector<double>::blade(g11, 0b011);
  for (const auto& [b, c] : mv.terms()) {
    double value = ScalarTraits<S>::to_double(c);
    if constexpr (std::is_same_v<S, Complex>) {
      if (c.imag() != 0.0) throw DomainError("rep_g12 takes real multivectors");
    }
    if (b & f2) {
      v += Multivector<double>::blade(g11, b & ~f2, value) * e1f1;
    } else {
      u.add(b, value);
    }
  }
  auto mu = rep_g11(u);
  auto mvv = rep_g11(v);
  Matrix<Complex> out(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = Complex(mu(i, j), mvv(i, j));
  return out;
}

}  // namespace lpgg
