#include <gtest/gtest.h>

#include "lpgg/lpgg.hpp"
#include "oracle.hpp"

using namespace lpgg;
using MV = Multivector<Radical>;

class FrameBySize : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(FrameBySize, NullAndCorrelated) {
  auto [size, sign] = GetParam();
  auto frame = build_null_frame<Radical>(size, sign);
  for (int i = 0; i < size; ++i) {
    EXPECT_TRUE((frame[i] * frame[i]).is_zero());
    for (int j = 0; j < size; ++j) {
      Radical want = i == j ? Radical(0) : Radical(make_rational(sign, 2));
      EXPECT_EQ(oracle::frame_dot(frame, i, j), want);
      EXPECT_EQ(scalar_product(frame[i], frame[j]), want);
    }
  }
  EXPECT_FALSE(wedge_list(frame.vectors()).is_zero());
}

TEST_P(FrameBySize, TransitionMatricesInvert) {
  auto [size, sign] = GetParam();
  auto frame = build_null_frame<Radical>(size, sign);
  EXPECT_EQ(frame.T() * frame.T_inv(), Matrix<Radical>::identity(size));
  EXPECT_EQ(frame.T_inv() * frame.T(), Matrix<Radical>::identity(size));
}

TEST_P(FrameBySize, MultiplicationTable) {
  auto [size, sign] = GetParam();
  auto frame = build_null_frame<Radical>(size, sign);
  auto report = verify_multiplication_table(frame);
  EXPECT_TRUE(report.ok()) << (report.ok() ? "" : report.violations.front());
  EXPECT_EQ(report.pairs_checked, size * (size - 1) / 2);
  EXPECT_EQ(report.entries_checked, 16 * report.pairs_checked);
}

TEST_P(FrameBySize, KSumSquares) {
  auto [size, sign] = GetParam();
  auto frame = build_null_frame<Radical>(size, sign);
  for (int k = 1; k <= size; ++k) {
    auto a = k_sum(frame, k);
    EXPECT_EQ(a * a, MV(frame.context(), Radical(sign * oracle::binomial(k, 2))));
    if (k >= 2) {
      auto u = unit_k_sum(frame, k);
      EXPECT_EQ(u * u, MV(frame.context(), Radical(sign)));
    }
  }
}

TEST_P(FrameBySize, ReciprocalFrame) {
  auto [size, sign] = GetParam();
  auto frame = build_null_frame<Radical>(size, sign);
  auto rec = reciprocal_frame(frame);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) EXPECT_EQ(scalar_product(rec[i], frame[j]), Radical(i == j ? 1 : 0));
}

TEST_P(FrameBySize, CoordinatesRoundTrip) {
  auto [size, sign] = GetParam();
  auto frame = build_null_frame<Radical>(size, sign);
  RandomSource rng(static_cast<unsigned long long>(size * 10 + (sign > 0)));
  for (int s = 0; s < 20; ++s) {
    auto x = rng.coordinates<Radical>(size);
    auto v = frame.vector_from(std::span<const Radical>(x));
    EXPECT_EQ(frame.coordinates_of(v), x);
  }
}

INSTANTIATE_TEST_SUITE_P(AllSizes, FrameBySize,
                         ::testing::Combine(::testing::Range(2, 9), ::testing::Values(1, -1)));

TEST(Frame, SizeLimits) {
  EXPECT_THROW(build_null_frame<Radical>(1, 1), DomainError);
  EXPECT_THROW(build_null_frame<Radical>(13, 1), DimensionLimitError);
  EXPECT_THROW(build_null_frame<Radical>(3, 0), DomainError);
  EXPECT_NO_THROW(build_null_frame<Radical>(12, 1));
}

TEST(Frame, ThreeDimensionalTransition) {
  auto frame = build_null_frame<Radical>(3, 1);
  Matrix<Radical> t{{make_rational(1, 2), make_rational(1, 2), 0}, {make_rational(1, 2), make_rational(-1, 2), 0},
                    {1, 0, 1}};
  EXPECT_EQ(frame.T(), t);
  EXPECT_EQ(frame.T_inv(), inverse(t));
}

TEST(Frame, PseudoscalarMatchesDeterminant) {
  // a_1 ^ ... ^ a_{n+1} = det(T) e1 f1 ... fn, so the relation coefficient
  // is 1/det(T).
  for (int size = 2; size <= 8; ++size) {
    auto frame = build_null_frame<Radical>(size, 1);
    auto rel = pseudoscalar_relation(frame);
    EXPECT_TRUE(rel.match) << "n+1 = " << size;
    EXPECT_EQ(rel.coefficient * oracle::cofactor_det(frame.T()), Radical(1));
  }
  auto three = build_null_frame<Radical>(3, 1);
  auto i = MV::blade(three.context(), three.context().pseudoscalar());
  EXPECT_EQ(i, wedge_list(three.vectors()) * Radical(-2));
}

TEST(Frame, CanonicalBasisInvertible) {
  for (int size = 2; size <= 8; ++size) {
    auto frame = build_null_frame<Radical>(size, 1);
    NullCanonicalBasis<Radical> basis(frame);
    EXPECT_EQ(basis.products().size(), std::size_t{1} << size);
    EXPECT_EQ(rank(basis.matrix()), std::size_t{1} << size);
  }
}

TEST(Frame, CanonicalFormsOfThreeDimensionalBlades) {
  auto frame = build_null_frame<Radical>(3, 1);
  NullCanonicalBasis<Radical> basis(frame);
  const auto& ctx = frame.context();
  EXPECT_EQ(basis.express_text(parse_multivector<Radical>(ctx, "e1^f1")), "1 - 2*a1a2");
  EXPECT_EQ(basis.express_text(parse_multivector<Radical>(ctx, "e1^f2")), "-1 + a1a3 + a2a3");
  EXPECT_EQ(basis.express_text(parse_multivector<Radical>(ctx, "e1^f1^f2")), "a1 - a2 + a3 - 2*a1a2a3");
  // Each expansion multiplies back to the blade.
  auto a = [&](int k) { return frame[k - 1]; };
  MV one(ctx, Radical(1));
  EXPECT_EQ(a(1) * a(3) + a(2) * a(3) - one, parse_multivector<Radical>(ctx, "e1^f2"));
  EXPECT_EQ(a(1) - a(2) + a(3) - a(1) * a(2) * a(3) * Radical(2), parse_multivector<Radical>(ctx, "e1^f1^f2"));
}

TEST(Frame, StandardCoordinatesToNull) {
  auto frame = build_null_frame<Radical>(3, 1);
  CoordinateRow<Radical> s{{1, 1, 0}, CoordinateBasis::standard};
  auto x = to_null_coordinates(frame, s);
  EXPECT_EQ(x.entries, (std::vector<Radical>{2, 0, 0}));
  EXPECT_EQ(to_standard_coordinates(frame, x).entries, s.entries);
  CoordinateRow<Radical> bad{{1, 1}, CoordinateBasis::standard};
  EXPECT_THROW(to_null_coordinates(frame, bad), DomainError);
}

TEST(Frame, ApproximateBackendMatchesExact) {
  auto exact = build_null_frame<Radical>(8, 1);
  auto approx = build_null_frame<double>(8, 1);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) EXPECT_NEAR(exact.T()(r, c).to_double(), approx.T()(r, c), 1e-14);
}
