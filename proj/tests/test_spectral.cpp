#include <gtest/gtest.h>

#include "lpgg/lpgg.hpp"
#include "oracle.hpp"

using namespace lpgg;
using RMV = Multivector<Rational>;
using MV = Multivector<Radical>;

TEST(Spectral, PlaneEndomorphismEigenvectors) {
  auto frame = build_null_frame<Rational>(2, 1);
  RandomSource rng(21);
  for (int s = 0; s < 100; ++s) {
    auto c1 = rng.coordinates<Rational>(2);
    auto c2 = rng.coordinates<Rational>(2);
    auto v1 = frame.vector_from(std::span<const Rational>(c1));
    auto v2 = frame.vector_from(std::span<const Rational>(c2));
    const Rational det = c1[0] * c2[1] - c1[1] * c2[0];
    EXPECT_EQ(frame_determinant_2d(frame, v1, v2), det);
    EXPECT_EQ(wedge_endo_2d(frame, v1, v2, frame[0]), frame[0] * det);
    EXPECT_EQ(wedge_endo_2d(frame, v1, v2, frame[1]), frame[1] * Rational(-det));
    auto x = rng.frame_vector(frame);
    EXPECT_EQ(wedge_endo_2d(frame, v1, v2, x), wedge_endo_2d_expanded(v1, v2, x));
    EXPECT_TRUE(cayley_grassmann_residual(frame, v1, v2, x).is_zero());
    if (det != 0) {
      auto pc = projective_coordinates(frame, v1, v2, x);
      EXPECT_TRUE(pc.reconstructs);
      EXPECT_EQ(v1 * pc.c1 - v2 * pc.c2, x);
    }
  }
}

TEST(Spectral, PlaneMapRequiresTwoDimensionalFrame) {
  auto frame = build_null_frame<Rational>(3, 1);
  EXPECT_THROW(wedge_endo_2d(frame, frame[0], frame[1], frame[2]), ContextMismatchError);
}

TEST(Spectral, TrivectorMapIsDuality) {
  auto frame = build_null_frame<Radical>(3, 1);
  const MV i = MV::blade(frame.context(), frame.context().pseudoscalar());
  RandomSource rng(22);
  for (int s = 0; s < 50; ++s) {
    auto x = rng.coordinates<Radical>(3);
    auto v = frame.vector_from(std::span<const Radical>(x));
    auto pe = pseudoscalar_endo_3d(frame, v);
    EXPECT_EQ(pe.bivector_coordinates[0], x[0] + x[1]);
    EXPECT_EQ(pe.bivector_coordinates[1], x[1] + x[2]);
    EXPECT_EQ(pe.bivector_coordinates[2], x[0] + x[2]);
    EXPECT_EQ(pe.value, -(i * v));
  }
}

TEST(Spectral, FrameBivectorsSquareToQuarterButDoNotAnticommute) {
  auto frame = build_null_frame<Radical>(3, 1);
  auto b = frame_bivectors(frame);
  const auto& ctx = frame.context();
  for (const auto& x : b) EXPECT_EQ(x * x, MV(ctx, Radical(make_rational(1, 4))));
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) EXPECT_EQ(b[p] * b[q] + b[q] * b[p], MV(ctx, Radical(make_rational(-1, 2))));
}

namespace {

/// Discriminant from the g_ij alone: sum g_k^2 - 2 sum g_k g_l.
Rational discriminant_oracle(const Matrix<Rational>& g) {
  Rational g1 = g(1, 2) - g(2, 1);
  Rational g2 = g(2, 0) - g(0, 2);
  Rational g3 = g(0, 1) - g(1, 0);
  return g1 * g1 + g2 * g2 + g3 * g3 - 2 * (g1 * g2 + g2 * g3 + g3 * g1);
}

}  // namespace

TEST(Spectral, DiscriminantAgreesWithOracle) {
  auto frame = build_null_frame<Rational>(3, 1);
  RandomSource rng(23);
  for (int s = 0; s < 100; ++s) {
    Matrix<Rational> g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (r != c) g(r, c) = rng.rational();
    BivectorOperator<Rational> op(frame, g);
    EXPECT_EQ(op.discriminant(), discriminant_oracle(g));
    EXPECT_EQ(op.element(), op.from_products());
  }
  Matrix<Rational> g(3, 3);
  g(0, 1) = 1;
  g(1, 2) = 2;
  g(2, 0) = 3;
  BivectorOperator<Rational> op(frame, g);
  EXPECT_EQ(op.discriminant(), -8);
  EXPECT_EQ(op.stated_discriminant(), 14);
}

TEST(Spectral, DecompositionOnRealSpectra) {
  auto frame = build_null_frame<Radical>(3, 1);
  RandomSource rng(24);
  int done = 0;
  while (done < 100) {
    Matrix<Radical> g(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (r != c) g(r, c) = Radical(rng.rational());
    BivectorOperator<Radical> op(frame, g);
    if (op.discriminant().sign() <= 0) continue;
    ++done;
    auto sd = spectral_decompose(op);
    const MV one(frame.context(), Radical(1));
    EXPECT_EQ(sd.p1 + sd.p2, one);
    EXPECT_TRUE((sd.p1 * sd.p2).is_zero());
    EXPECT_EQ(sd.p1 * sd.p1, sd.p1);
    EXPECT_EQ(sd.p2 * sd.p2, sd.p2);
    EXPECT_EQ(sd.p1 * sd.r_minus + sd.p2 * sd.r_plus, op.element());
    // Roots of t^2 - tr t + (tr^2 - D)/4.
    const Radical tr = op.trace();
    for (const Radical& r : {sd.r_minus, sd.r_plus})
      EXPECT_TRUE((r * r - tr * r + (tr * tr - sd.discriminant) * Radical(make_rational(1, 4))).is_zero());
    EXPECT_TRUE(minimal_polynomial(op, op.element()).is_zero());
  }
}

TEST(Spectral, ComplexSpectrumWithinTolerance) {
  auto frame = build_null_frame<Complex>(3, 1);
  Matrix<Complex> g(3, 3);
  g(0, 1) = 1.0;
  g(1, 2) = 2.0;
  g(2, 0) = 3.0;
  BivectorOperator<Complex> op(frame, g);
  auto sd = spectral_decompose(op);
  EXPECT_NEAR(sd.r_minus.imag(), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sd.r_plus.real(), 3.0, 1e-12);
  const Multivector<Complex> one(frame.context(), Complex(1.0));
  EXPECT_EQ(sd.p1 + sd.p2, one);
  EXPECT_EQ(sd.p1 * sd.p1, sd.p1);
  EXPECT_EQ(sd.p1 * sd.r_minus + sd.p2 * sd.r_plus, op.element());
}

TEST(Spectral, RealBackendRejectsNegativeDiscriminant) {
  auto frame = build_null_frame<Radical>(3, 1);
  Matrix<Radical> g(3, 3);
  g(0, 1) = 1;
  g(1, 2) = 2;
  g(2, 0) = 3;
  EXPECT_THROW(spectral_decompose(BivectorOperator<Radical>(frame, g)), Error);
}

TEST(Spectral, DegenerateSpectrum) {
  auto frame = build_null_frame<Radical>(3, 1);
  Matrix<Radical> g(3, 3);
  g(0, 1) = 1;
  g(1, 0) = 1;
  EXPECT_THROW(spectral_decompose(BivectorOperator<Radical>(frame, g)), DomainError);
}

TEST(Spectral, SingleProductHasRootsZeroAndOne) {
  auto frame = build_null_frame<Radical>(3, 1);
  Matrix<Radical> g(3, 3);
  g(0, 1) = 1;
  auto sd = spectral_decompose(BivectorOperator<Radical>(frame, g));
  EXPECT_EQ(sd.r_minus, Radical(0));
  EXPECT_EQ(sd.r_plus, Radical(1));
  EXPECT_EQ(sd.p2, frame[0] * frame[1]);
}

TEST(Representation, TwoByTwoRealForG11) {
  auto frame = build_null_frame<Rational>(2, 1);
  EXPECT_EQ(rep_g11(frame[0]), (Matrix<Rational>{{0, 0}, {1, 0}}));
  EXPECT_EQ(rep_g11(frame[1]), (Matrix<Rational>{{0, 1}, {0, 0}}));
  EXPECT_EQ(rep_g11(RMV(frame.context(), Rational(1))), Matrix<Rational>::identity(2));
  RandomSource rng(25);
  for (int s = 0; s < 100; ++s) {
    auto u = rng.multivector<Rational>(frame.context());
    auto v = rng.multivector<Rational>(frame.context());
    EXPECT_EQ(rep_g11(u * v), rep_g11(u) * rep_g11(v));
  }
  EXPECT_THROW(rep_g11(RMV(AlgebraContext(2, 0), Rational(1))), DomainError);
}

TEST(Representation, TwoByTwoComplexForG12) {
  auto frame = build_null_frame<Rational>(3, 1);
  const Complex i(0.0, 1.0);
  EXPECT_EQ(rep_g12(frame[0]), (Matrix<Complex>{{0.0, 0.0}, {1.0, 0.0}}));
  EXPECT_EQ(rep_g12(frame[1]), (Matrix<Complex>{{0.0, 1.0}, {0.0, 0.0}}));
  EXPECT_EQ(rep_g12(frame[2]), (Matrix<Complex>{{i, 1.0}, {1.0, -i}}));
  const auto& ctx = frame.context();
  EXPECT_EQ(rep_g12(RMV::generator(ctx, 0)), (Matrix<Complex>{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(rep_g12(RMV::generator(ctx, 1)), (Matrix<Complex>{{0.0, -1.0}, {1.0, 0.0}}));
  EXPECT_EQ(rep_g12(RMV::generator(ctx, 2)), (Matrix<Complex>{{i, 0.0}, {0.0, -i}}));
  RandomSource rng(26);
  for (int s = 0; s < 100; ++s) {
    auto u = rng.multivector<Rational>(ctx);
    auto v = rng.multivector<Rational>(ctx);
    EXPECT_EQ(rep_g12(u * v), rep_g12(u) * rep_g12(v));
  }
}

TEST(Representation, RegularRepresentationIsFaithful) {
  AlgebraContext ctx(1, 2);
  Matrix<Rational> stack(64, 8);
  for (Blade b = 0; b < 8; ++b) {
    auto r = regular_representation(RMV::blade(ctx, b));
    for (std::size_t k = 0; k < 64; ++k) stack(k, b) = r(k / 8, k % 8);
  }
  EXPECT_EQ(rank(stack), 8u);
  RandomSource rng(27);
  for (int s = 0; s < 30; ++s) {
    auto u = rng.multivector<Rational>(ctx);
    auto v = rng.multivector<Rational>(ctx);
    EXPECT_EQ(regular_representation(u * v), regular_representation(u) * regular_representation(v));
  }
  EXPECT_THROW(regular_representation(RMV(AlgebraContext(5, 4), Rational(1))), DimensionLimitError);
}
