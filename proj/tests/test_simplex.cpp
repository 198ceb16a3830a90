#include <gtest/gtest.h>

#include "lpgg/lpgg.hpp"
#include "oracle.hpp"

using namespace lpgg;
using MV = Multivector<Radical>;

namespace {

std::vector<Radical> row(std::initializer_list<long> v) {
  std::vector<Radical> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

class SimplexByDimension : public ::testing::TestWithParam<int> {};

TEST_P(SimplexByDimension, ContentFormsAgree) {
  const int n = GetParam();
  auto frame = build_null_frame<Radical>(n + 1, 1);
  auto c = content_null(frame);
  EXPECT_TRUE(c.proportional);
  EXPECT_TRUE(c.equal);
  EXPECT_TRUE(c.product.has_only_grades({n}));
}

TEST_P(SimplexByDimension, PointsWedgeContentToScaledVolume) {
  const int n = GetParam();
  auto frame = build_null_frame<Radical>(n + 1, 1);
  auto c = content_null(frame);
  RandomSource rng(60 + n);
  const Radical inv_fact(make_rational(Integer(1), detail::factorial(n)));
  const MV volume = wedge_list(frame.vectors()) * inv_fact;
  EXPECT_EQ(scaled_frame_volume(frame), volume);
  for (int s = 0; s < 50; ++s) {
    auto p = make_simplex_point(frame, to_scalars<Radical>(rng.barycentric(n + 1)));
    EXPECT_TRUE(p.barycentric);
    EXPECT_EQ(outer_product(point_vector(frame, p), c.product), volume);
    EXPECT_EQ(content_wedge(frame, p), volume);
  }
}

TEST_P(SimplexByDimension, SquareMatchesPairwiseOracle) {
  const int n = GetParam();
  auto frame = build_null_frame<Radical>(n + 1, 1);
  RandomSource rng(70 + n);
  for (int s = 0; s < 30; ++s) {
    auto x = to_scalars<Radical>(rng.barycentric(n + 1));
    auto p = make_simplex_point(frame, x);
    Radical pairwise(0);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairwise += x[i] * x[j];
    EXPECT_EQ(light_cone_square(frame, p), pairwise);
    EXPECT_EQ(light_cone_square(frame, p), oracle::quadratic_form(frame, x));
    EXPECT_GE(light_cone_square(frame, p).sign(), 0);
  }
}

TEST_P(SimplexByDimension, VerticesOnLightCone) {
  const int n = GetParam();
  auto frame = build_null_frame<Radical>(n + 1, 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<Radical> e(static_cast<std::size_t>(n + 1), Radical(0));
    e[i] = Radical(1);
    auto p = make_simplex_point(frame, e);
    EXPECT_TRUE(on_light_cone(frame, p));
    EXPECT_THROW(unit(frame, p), DomainError);
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, SimplexByDimension, ::testing::Range(1, 6));

TEST(Simplex, CentroidOfTriangle) {
  auto frame = build_null_frame<Radical>(3, 1);
  const Radical third(make_rational(1, 3));
  auto p = make_simplex_point(frame, {third, third, third});
  EXPECT_EQ(light_cone_square(frame, p), third);
  EXPECT_EQ(light_cone_norm(frame, p), Radical::sqrt_of(make_rational(1, 3)));
  auto u = unit(frame, p);
  EXPECT_EQ(u * u, MV(frame.context(), Radical(1)));
}

TEST(Simplex, DecimalCentroidIsApproximatelyAThird) {
  auto frame = build_null_frame<Radical>(3, 1);
  auto p = make_simplex_point(frame, to_scalars<Radical>(parse_csv_row("0.3333333,0.3333333,0.3333334")));
  EXPECT_TRUE(p.barycentric);
  EXPECT_NEAR(light_cone_square(frame, p).to_double(), 1.0 / 3.0, 1e-7);
}

TEST(Simplex, NonBarycentricPointsAreFlagged) {
  auto frame = build_null_frame<Radical>(3, 1);
  EXPECT_FALSE(make_simplex_point(frame, row({2, 0, 0})).barycentric);
  EXPECT_FALSE(make_simplex_point(frame, row({2, -1, 0})).barycentric);
  EXPECT_THROW(make_simplex_point(frame, row({1, 0})), DomainError);
}

TEST(Simplex, ClosedAndOrder) {
  auto frame = build_null_frame<Radical>(3, 1);
  SimplicialMatrix<Radical> closed(frame, {row({1, -1, 0}), row({0, 1, -1}), row({-1, 0, 1})});
  SimplicialMatrix<Radical> open(frame, {row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})});
  SimplicialMatrix<Radical> dependent(frame, {row({1, 0, 0}), row({0, 1, 0}), row({1, 1, 0})});
  EXPECT_TRUE(is_closed(closed));
  EXPECT_FALSE(is_closed(open));
  EXPECT_EQ(order(open), 3);
  EXPECT_EQ(order(dependent), 2);
  EXPECT_EQ(order(closed), 2);
  EXPECT_EQ(static_cast<std::size_t>(order(closed)), rank(closed.matrix()));
}

TEST(Simplex, ContentIsAlternatingAndDetectsDegeneracy) {
  auto frame = build_null_frame<Radical>(4, 1);
  RandomSource rng(81);
  for (int s = 0; s < 20; ++s) {
    std::vector<std::vector<Radical>> rows;
    for (int k = 0; k < 4; ++k) rows.push_back(to_scalars<Radical>(rng.barycentric(4)));
    auto swapped = rows;
    std::swap(swapped[1], swapped[3]);
    EXPECT_EQ(content_vertices(SimplicialMatrix<Radical>(frame, swapped)).value,
              -content_vertices(SimplicialMatrix<Radical>(frame, rows)).value);
    auto repeated = rows;
    repeated[2] = repeated[0];
    EXPECT_TRUE(content_vertices(SimplicialMatrix<Radical>(frame, repeated)).degenerate);
  }
}

TEST(Simplex, VertexContentOfFrameIsFactorialContent) {
  for (int n = 1; n <= 5; ++n) {
    auto frame = build_null_frame<Radical>(n + 1, 1);
    std::vector<std::vector<Radical>> rows;
    for (int i = 0; i <= n; ++i) {
      std::vector<Radical> e(static_cast<std::size_t>(n + 1), Radical(0));
      e[i] = Radical(1);
      rows.push_back(e);
    }
    auto vc = content_vertices(SimplicialMatrix<Radical>(frame, rows));
    EXPECT_EQ(vc.value, content_null(frame).product * Radical(Rational(detail::factorial(n))));
  }
}

TEST(Simplex, LaplacianReportConventions) {
  auto report = simplex_laplacian_report<Radical>(3);
  ASSERT_EQ(report.size(), 2u);
  EXPECT_EQ(report[0].frame_size, 4);
  EXPECT_EQ(report[1].frame_size, 3);
  for (const auto& conv : report) EXPECT_EQ(conv.scalar_valued.status, Status::pass);
  // Over n frame vectors the first-order and x^2 lines hold verbatim.
  EXPECT_EQ(report[1].lines.front().status, Status::pass);
  EXPECT_EQ(report[1].lines.back().status, Status::pass);
  EXPECT_THROW(simplex_laplacian_report<Radical>(1), DomainError);
}
