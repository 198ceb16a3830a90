#include <gtest/gtest.h>

#include <sstream>

#include "lpgg/lpgg.hpp"

using namespace lpgg;

TEST(Io, CsvRowsSkipCommentsAndBlankLines) {
  auto rows = parse_rows("# header\n1/3, 1/3, 1/3\n\n0.5,0.25,0.25\r\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], make_rational(1, 3));
  EXPECT_EQ(rows[1][0], make_rational(1, 2));
  EXPECT_EQ(rows[1][2], make_rational(1, 4));
}

TEST(Io, JsonRowsAndFlatArray) {
  auto rows = parse_rows("[[1, \"1/2\"], [0.25, -3]]");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][1], make_rational(1, 2));
  EXPECT_EQ(rows[1][0], make_rational(1, 4));
  EXPECT_EQ(rows[1][1], Rational(-3));
  auto flat = parse_rows("[1, 2, 3]");
  ASSERT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0].size(), 3u);
}

TEST(Io, MalformedInputIsAParseError) {
  EXPECT_THROW(parse_rows("[[1, 2]"), ParseError);
  EXPECT_THROW(parse_rows("[[1, true]]"), ParseError);
  EXPECT_THROW(parse_rows("[[1], 2]"), ParseError);
  EXPECT_THROW(parse_rows("1,,2"), ParseError);
  EXPECT_THROW(parse_rows("1, x"), ParseError);
}

TEST(Io, ScalarJsonShapes) {
  EXPECT_EQ(scalar_json(make_rational(-1, 3)), Json("-1/3"));
  EXPECT_EQ(scalar_json(0.5), Json(0.5));
  EXPECT_EQ(scalar_json(Complex(1.0, -2.0)).dump(), R"({"re":1.0,"im":-2.0})");
  auto r = Radical(make_rational(1, 2)) + Radical::sqrt_of(Rational(3));
  EXPECT_EQ(scalar_json(r).dump(), R"([{"rational":"1/2","sqrt":1},{"rational":"1","sqrt":3}])");
}

TEST(Io, CsvFieldQuoting) {
  EXPECT_EQ(csv_field("a1"), "a1");
  EXPECT_EQ(csv_field("1,2"), "\"1,2\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Io, ReportJsonKeysAndExitCode) {
  VerificationReport r;
  r.suite = "core";
  r.seed = 7;
  r.add(make_check("a", "x = x", true));
  IdentityLine line{"y = 2x", Status::pass_corrected, {"3"}, {"2"}, {}};
  r.add(to_check(line, "b"));
  auto j = report_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "seed", "backend", "corrected", "summary", "checks"}));
  EXPECT_TRUE(j["corrected"].get<bool>());
  EXPECT_EQ(j["checks"][1]["status"], "pass-corrected");
  EXPECT_EQ(j["checks"][1]["details"], "stated (3), derived (2)");
  EXPECT_EQ(r.exit_code(), 0);
  r.add(make_check("c", "false", false));
  EXPECT_EQ(r.exit_code(), 1);
  std::ostringstream text;
  write_report_text(text, r);
  EXPECT_NE(text.str().find("suite core, seed 7, exact: 1 pass, 1 pass-corrected, 1 fail, 0 skipped"), std::string::npos);
}
