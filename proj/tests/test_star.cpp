#include <gtest/gtest.h>

#include "lpgg/lpgg.hpp"
#include "oracle.hpp"

using namespace lpgg;
using MV = Multivector<Radical>;

class StarBySize : public ::testing::TestWithParam<int> {};

TEST_P(StarBySize, InvolutionAndHomomorphism) {
  const int size = GetParam();
  auto frame = build_null_frame<Radical>(size, 1);
  RandomSource rng(100 + size);
  for (int s = 0; s < 100; ++s) {
    auto g = rng.multivector<Radical>(frame.context());
    auto h = rng.multivector<Radical>(frame.context());
    for (int k = 2; k <= size; ++k) EXPECT_EQ(star(frame, star(frame, g, k), k), g);
    EXPECT_EQ(star(frame, g * h), star(frame, g) * star(frame, h));
    EXPECT_EQ(star(frame, g + h), star(frame, g) + star(frame, h));
  }
}

TEST_P(StarBySize, ContractionIsScaledStar) {
  // sum_ij a_i g a_j = A g A and A^2 = C(n+1, 2).
  const int size = GetParam();
  auto frame = build_null_frame<Radical>(size, 1);
  const Radical c(oracle::binomial(size, 2));
  const MV A = k_sum(frame, size);
  RandomSource rng(200 + size);
  for (int s = 0; s < 30; ++s) {
    auto g = rng.multivector<Radical>(frame.context());
    auto am = a_matrix(frame, g);
    EXPECT_EQ(am.contraction, A * g * A);
    EXPECT_EQ(am.contraction, star(frame, g) * c);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) EXPECT_EQ(am(i, j), frame[i] * g * frame[j]);
  }
}

TEST_P(StarBySize, MediatedProductNeedsNormalization) {
  const int size = GetParam();
  auto frame = build_null_frame<Radical>(size, 1);
  RandomSource rng(300 + size);
  const long c = oracle::binomial(size, 2);
  for (int s = 0; s < 20; ++s) {
    auto g = rng.multivector<Radical>(frame.context());
    auto h = rng.multivector<Radical>(frame.context());
    auto m = mediated_product_check(frame, g, h);
    EXPECT_TRUE(m.normalized_matches);
    EXPECT_EQ(m.factor, Radical(c * c));
    EXPECT_EQ(m.raw, g * h * Radical(c * c));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFrames, StarBySize, ::testing::Values(2, 3, 4));

TEST(Star, RangeOfK) {
  auto frame = build_null_frame<Radical>(3, 1);
  MV g(frame.context(), Radical(1));
  EXPECT_THROW(star(frame, g, 1), DomainError);
  EXPECT_THROW(star(frame, g, 4), DomainError);
}

TEST(Star, CoefficientMatrixElements) {
  auto frame = build_null_frame<Radical>(3, 1);
  Matrix<Radical> m(3, 3);
  m(0, 1) = 2;
  m(1, 2) = -1;
  m(2, 0) = make_rational(1, 3);
  m(1, 1) = 7;  // ignored
  auto g = from_coefficient_matrix(frame, m);
  EXPECT_TRUE(g.has_only_grades({0, 2}));
  EXPECT_EQ(g.scalar_part(), Radical(make_rational(2 - 1, 2) + make_rational(1, 6)));
  EXPECT_EQ(g, frame[0] * frame[1] * Radical(2) - frame[1] * frame[2] + frame[2] * frame[0] * Radical(make_rational(1, 3)));
  EXPECT_THROW(from_coefficient_matrix(frame, Matrix<Radical>(2, 2)), DomainError);
}

TEST(Star, VectorsAreReflectedThroughTheUnitSum) {
  auto frame = build_null_frame<Radical>(4, 1);
  const MV u = unit_k_sum(frame, 4);
  RandomSource rng(7);
  for (int s = 0; s < 20; ++s) {
    auto v = rng.frame_vector(frame);
    // u v u = 2 (u.v) u - v since u^2 = 1.
    EXPECT_EQ(star(frame, v), u * (scalar_product(u, v) * Radical(2)) - v);
  }
}
