#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "csst/csst.hpp"
#include "csst/errors.hpp"
#include "csst/io.hpp"
#include "csst/phase.hpp"
#include "csst/report.hpp"
#include "csst/triortho.hpp"
#include "helpers.hpp"

using namespace csst;

namespace {

LinearCode code(std::vector<std::string> rows) { return LinearCode::from_rows(BitMatrix::from_strings(rows)); }

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_code(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(CodeFile, ParsesWithComments) {
  std::istringstream in("# hamming\n7 4\n1101000\n0110100\n0011010\n# trailing\n0001101\n");
  const auto c = parse_code(in);
  EXPECT_EQ(c, cyclic_code(7, Gf2Poly::from_string("1101")));
}

TEST(CodeFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\n110\n01\n"), 3U);
  EXPECT_EQ(parse_error_line("# c\n3 2\n110\n0a1\n"), 4U);
  EXPECT_EQ(parse_error_line("3 2\n110\n110\n"), 1U);
  EXPECT_EQ(parse_error_line("3 3\n110\n011\n"), 1U);
  EXPECT_EQ(parse_error_line("three 1\n111\n"), 1U);
}

TEST(CodeFile, RoundTrip) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 70;
    const auto c = gen::random_code(n, 1 + rng() % std::min<std::size_t>(n, 8), rng);
    std::istringstream in(format_code(c));
    EXPECT_EQ(parse_code(in), c);
  }
}

TEST(PairFile, RoundTrip) {
  const auto p = fifteen_one_three();
  std::istringstream in(format_css_pair(p));
  const auto q = parse_css_pair(in);
  EXPECT_EQ(q.c1, p.c1);
  EXPECT_EQ(q.c2, p.c2);
  std::istringstream bad("2 1\n11\n\n2 1\n10\n");
  EXPECT_THROW(parse_css_pair(bad), ContainmentError);
}

TEST(PolySpec, Examples) {
  const auto c = parse_poly_spec("7;1101");
  EXPECT_EQ(c.k(), 4U);
  const auto c89 = [] {
    std::ifstream f(std::string(CSST_DATA_DIR) + "/cyclic89.txt");
    std::string s;
    std::getline(f, s);
    return parse_poly_spec(s);
  }();
  EXPECT_EQ(c89.n(), 89U);
  EXPECT_EQ(c89.k(), 44U);
  EXPECT_TRUE(classify(c89).is_self_orthogonal);
  EXPECT_THROW(parse_poly_spec("7-1101"), ParseError);
  EXPECT_THROW(parse_poly_spec("7;11x1"), ParseError);
  EXPECT_THROW(parse_poly_spec("7;111"), InvalidArgument);
}

TEST(SelfDualDb, FixturesLoad) {
  const auto db = load_selfdual_db(std::string(CSST_DATA_DIR) + "/selfdual.txt");
  ASSERT_EQ(db.size(), 2U);
  EXPECT_EQ(db[0].name, "sd18");
  EXPECT_EQ(db[0].code.n(), 18U);
  EXPECT_EQ(db[1].name, "sd20");
  EXPECT_EQ(db[1].code.k(), 10U);
}

TEST(SelfDualDb, RejectsNonSelfDualBlock) {
  std::istringstream in("# ok 2 1 selfdual\n2 1\n11\n\n# bad 4 2 selfdual\n4 2\n1100\n1010\n");
  try {
    parse_selfdual_db(in, "db.txt");
    FAIL() << "expected rejection";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5U);
    EXPECT_NE(std::string(e.what()).find("selfdual check failed for bad"), std::string::npos);
  }
  std::istringstream missing("2 1\n11\n");
  EXPECT_THROW(parse_selfdual_db(missing), ParseError);
}

TEST(Report, RawPairJson) {
  const auto p = make_css(code({"1111", "1100"}), code({"1111"}));
  CodeReport r;
  r.pair = p;
  r.params = css_params(p);
  r.csst = csst_verdict(p.c1, p.c2);
  const Json j = to_json(r);
  EXPECT_EQ(j["construction"], "raw");
  EXPECT_EQ(j["params"]["d"], 2);
  EXPECT_EQ(j["params"]["certificates"]["x"], "0011");
  EXPECT_EQ(j["csst"]["schur_ok"], true);
  EXPECT_EQ(j["triorthogonal"], "n/a");
  const std::string text = report_json(r);
  EXPECT_EQ(text, report_json(r));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"codes\""), text.find("\"construction\""));
}

TEST(Report, DiagonalJson) {
  const Json j = to_json(transversal_z_action(fifteen_one_three(), 3));
  EXPECT_EQ(j["preserved"], true);
  EXPECT_EQ(j["identity"], false);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["entries"]["1"], "7/8");
  const Json n = to_json(transversal_z_action(make_css(code({"1111", "1100"}), code({"1111"})), 3));
  EXPECT_EQ(n["order"], "n/a");
}

TEST(Report, ErrorJson) {
  const Json j = error_json("n1_odd", "first ingredient has even length");
  EXPECT_EQ(j["violated"], "n1_odd");
  EXPECT_EQ(report_json(j), "{\n  \"error\": \"first ingredient has even length\",\n  \"violated\": \"n1_odd\"\n}\n");
}

TEST(Report, ByteStableAcrossRuns) {
  std::mt19937_64 rng(83);
  const auto p = gen::random_pair(60, 20, 3, rng);
  DistanceOptions o;
  o.method = DistanceMethod::information_set;
  o.seed = 99;
  CodeReport a;
  a.pair = p;
  a.params = css_params(p, o);
  CodeReport b = a;
  o.workers = 3;
  b.params = css_params(p, o);
  EXPECT_EQ(report_json(a), report_json(b));
}
