#include <gtest/gtest.h>

#include <set>

#include "lpgg/lpgg.hpp"

using namespace lpgg;

namespace {

VerifyOptions small(std::string suite) {
  VerifyOptions o;
  o.suite = std::move(suite);
  o.n_max = 4;
  o.samples = 20;
  return o;
}

}  // namespace

class VerifySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(VerifySuite, ExactBackendHasNoFailures) {
  auto r = run_verification<Radical>(small(GetParam()));
  EXPECT_EQ(r.summary().fail, 0);
  for (const auto& c : r.checks) EXPECT_NE(c.status, Status::fail) << c.name << ": " << c.details;
}

TEST_P(VerifySuite, ApproxBackendHasNoFailures) {
  auto r = run_verification<double>(small(GetParam()));
  for (const auto& c : r.checks) EXPECT_NE(c.status, Status::fail) << c.name << ": " << c.details;
}

TEST_P(VerifySuite, SameSeedGivesIdenticalReport) {
  auto a = report_json(run_verification<Radical>(small(GetParam()))).dump();
  auto b = report_json(run_verification<Radical>(small(GetParam()))).dump();
  EXPECT_EQ(a, b);
}

INSTANTIATE_TEST_SUITE_P(Suites, VerifySuite,
                         ::testing::Values("core", "frame", "star", "calculus", "spectral", "simplex", "atlas"));

TEST(Verify, CalculusCorrectionsAreReported) {
  auto r = run_verification<Radical>(small("calculus"));
  std::set<std::string> corrected;
  for (const auto& c : r.checks)
    if (c.status == Status::pass_corrected) corrected.insert(c.name.substr(c.name.find('#')));
  EXPECT_TRUE(corrected.count("#7"));
  EXPECT_TRUE(corrected.count("#13"));
  EXPECT_TRUE(r.corrected());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Verify, NamesAreUnique) {
  auto r = run_verification<Radical>(small("all"));
  std::set<std::string> names;
  for (const auto& c : r.checks) EXPECT_TRUE(names.insert(c.name).second) << c.name;
}

TEST(Verify, RejectsBadOptions) {
  EXPECT_THROW(run_verification<Radical>(small("nosuch")), DomainError);
  auto o = small("frame");
  o.n_max = 9;
  EXPECT_THROW(run_verification<Radical>(o), DomainError);
  o.n_max = 1;
  EXPECT_THROW(run_verification<Radical>(o), DomainError);
}
