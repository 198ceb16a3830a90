#include <gtest/gtest.h>

#include "lpgg/lpgg.hpp"
#include "oracle.hpp"

using namespace lpgg;
using MV = Multivector<Radical>;
using Field = PolyField<Radical>;

namespace {

const IdentityLine& find_line(const std::vector<IdentityLine>& lines, const std::string& prefix) {
  for (const auto& l : lines)
    if (l.identity.rfind(prefix, 0) == 0) return l;
  throw std::runtime_error("no identity line starting with " + prefix);
}

}  // namespace

class CalculusBySize : public ::testing::TestWithParam<int> {};

TEST_P(CalculusBySize, GradientOfPositionAndSquare) {
  const int size = GetParam();
  auto frame = build_null_frame<Radical>(size, 1);
  auto nabla = make_nabla(frame);
  auto x = Field::position(frame);
  EXPECT_EQ(apply(nabla, x), Field::constant(frame.context(), size, MV(frame.context(), Radical(size))));
  EXPECT_EQ(apply(nabla, x * x), x * Radical(2));
  EXPECT_TRUE(apply(make_null_nabla(frame), x).is_zero());
}

TEST_P(CalculusBySize, ExactIdentitiesPassVerbatim) {
  const int size = GetParam();
  auto frame = build_null_frame<Radical>(size, 1);
  auto lines = identity_report(frame);
  for (const char* prefix : {"∇ = (2/n)(A∂", "∇ = (2/n)(∨∇", "A·∇ =", "∨∇ + ∇̂", "A·∨∇", "∇̂² =", "∇² =", "A² ="}) {
    EXPECT_EQ(find_line(lines, prefix).status, Status::pass) << prefix;
  }
}

TEST_P(CalculusBySize, DualLaplacianCoefficientsMatchOracle) {
  const int size = GetParam();
  const long n = size - 1;
  auto frame = build_null_frame<Radical>(size, 1);
  // Dual-sum dot products from pairwise metric sums only.
  const Radical diag = oracle::dual_dot(frame, 0, 0);
  const Radical cross = oracle::dual_dot(frame, 0, 1) * Radical(2);
  EXPECT_EQ(diag, Radical(make_rational(n * (n - 1), 2)));
  EXPECT_EQ(oracle::dual_dot(frame, 0, 1), Radical(make_rational(n * n - n + 1, 2)));
  auto line = find_line(identity_report(frame), "∨∇² =");
  ASSERT_EQ(line.derived_coefficients.size(), 2u);
  EXPECT_EQ(line.derived_coefficients[0], diag.to_string());
  EXPECT_EQ(line.derived_coefficients[1], cross.to_string());
  EXPECT_EQ(line.paper_coefficients[0], Rational(make_rational((n + 1) * n, 2)).get_str());
  EXPECT_EQ(line.status, Status::pass_corrected);

  auto dd = find_line(identity_report(frame), "∨a1·∨a2");
  EXPECT_EQ(dd.status, Status::pass_corrected);
  EXPECT_EQ(dd.derived_coefficients[0], make_rational(n * n - n + 1, 2).get_str());
}

TEST_P(CalculusBySize, MixedPartialsCommute) {
  const int size = GetParam();
  auto frame = build_null_frame<Radical>(size, 1);
  RandomSource rng(40 + size);
  Field f(frame.context(), size);
  for (const auto& e : monomial_exponents(size, 3)) f.add(e, rng.multivector<Radical>(frame.context(), 0.2));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) EXPECT_EQ(partial(partial(f, i), j), partial(partial(f, j), i));
}

INSTANTIATE_TEST_SUITE_P(Sizes, CalculusBySize, ::testing::Range(2, 7));

TEST(Calculus, ExpansionLineAtThreeIsVerbatim) {
  auto lines = identity_report(build_null_frame<Radical>(3, 1));
  EXPECT_EQ(find_line(lines, "(4/n²)").status, Status::pass);
}

TEST(Calculus, OperatorCompositionAppliesInOrder) {
  auto frame = build_null_frame<Radical>(3, 1);
  auto x = Field::position(frame);
  auto hat = make_null_nabla(frame);
  auto flat = make_flat_partial(frame);
  auto f = x * x * x;
  EXPECT_EQ(apply(compose(hat, flat), f), apply(hat, apply(flat, f)));
  EXPECT_EQ(apply(square(hat), f), apply(hat, apply(hat, f)));
}

TEST(Calculus, NullLaplacianIsMixedSecond) {
  for (int size = 2; size <= 6; ++size) {
    auto frame = build_null_frame<Radical>(size, 1);
    EXPECT_EQ(square(make_null_nabla(frame)), make_mixed_second(frame));
  }
}

TEST(Calculus, FiniteDifferencesAtInteriorPoints) {
  auto frame = build_null_frame<double>(4, 1);
  RandomSource rng(11);
  for (int s = 0; s < 20; ++s) {
    auto w = rng.barycentric(4, true);
    std::vector<double> pt;
    for (const auto& r : w) pt.push_back(r.get_d());
    for (FieldTag tag : {FieldTag::norm, FieldTag::unit, FieldTag::square, FieldTag::position}) {
      auto r = finite_difference_check(frame, tag, pt, 1e-5);
      EXPECT_TRUE(r.ok) << field_tag_name(tag) << " error " << r.error;
    }
  }
}

TEST(Calculus, FiniteDifferenceDomain) {
  auto frame = build_null_frame<double>(3, 1);
  std::vector<double> vertex{1.0, 0.0, 0.0};
  EXPECT_THROW(finite_difference_check(frame, FieldTag::norm, vertex, 1e-5), DomainError);
  std::vector<double> inside{0.2, 0.3, 0.5};
  EXPECT_THROW(finite_difference_check(frame, FieldTag::norm, inside, 1e-9), DomainError);
  EXPECT_EQ(parse_field_tag("x_hat"), FieldTag::unit);
  EXPECT_THROW(parse_field_tag("curl"), ParseError);
}
