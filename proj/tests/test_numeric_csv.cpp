#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "odflow/csv.hpp"
#include "odflow/numeric.hpp"

using namespace odflow;

TEST(ParseDecimal, AcceptsPlainReals) {
  EXPECT_EQ(parse_decimal("12"), 12.0);
  EXPECT_EQ(parse_decimal(" -3.5 "), -3.5);
  EXPECT_EQ(parse_decimal("+7"), 7.0);
  EXPECT_EQ(parse_decimal("1e6"), 1e6);
  EXPECT_EQ(parse_decimal(".5"), 0.5);
}

TEST(ParseDecimal, RejectsNonNumbers) {
  for (const char* s : {"", "  ", "1,000", "inf", "nan", "0x10", "abc", "1.2.3", "+-1", "--1", "12a"}) {
    EXPECT_FALSE(parse_decimal(s).has_value()) << s;
  }
}

TEST(FormatFixed, RoundsHalfAwayFromZero) {
  EXPECT_EQ(format_fixed(0.125, 2), "0.13");
  EXPECT_EQ(format_fixed(2.675, 2), "2.68");
  EXPECT_EQ(format_fixed(-2.5, 0), "-3");
  EXPECT_EQ(format_fixed(0.999, 0), "1");
  EXPECT_EQ(format_fixed(9.9995, 3), "10.000");
  EXPECT_EQ(format_fixed(-0.0004, 3), "0.000");
  EXPECT_EQ(format_fixed(-0.0, 1), "0.0");
  EXPECT_EQ(format_fixed(123.0, 3), "123.000");
  EXPECT_EQ(format_fixed(1e-7, 3), "0.000");
}

TEST(FormatShortest, RoundTrips) {
  EXPECT_EQ(format_shortest(0.0), "0");
  EXPECT_EQ(format_shortest(0.15), "0.15");
  EXPECT_EQ(format_shortest(0.15 * 0.9), "0.135");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 500; ++i) {
    const double v = u(rng);
    EXPECT_EQ(*parse_decimal(format_shortest(v)), v);
  }
}

TEST(ExactSum, IsOrderInsensitive) {
  EXPECT_EQ(exact_sum({1e100, 1.0, -1e100}), 1.0);
  std::vector<double> v = {0.1, 1.0, 1e-3, 3.0, -2.5e-4, 1e8, -7.3};
  // Quad precision holds these partial sums exactly.
  __float128 q = 0;
  for (double x : v) q += x;
  const double ref = exact_sum(v);
  EXPECT_EQ(ref, static_cast<double>(q));
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(exact_sum(v), ref);
  }
  EXPECT_EQ(exact_sum({}), 0.0);
  EXPECT_EQ(exact_sum({0.1, 0.2, 0.3}), 0.6);
}

TEST(Csv, ParsesQuotesCrlfAndBom) {
  const auto t = parse_csv("\xEF\xBB\xBFid,\"name, full\",note\r\n1,\"a \"\"b\"\"\",x\r\n\r\n2,c,\"multi\nline\"\n");
  ASSERT_EQ(t.header.size(), 3u);
  EXPECT_EQ(t.header[0], "id");
  EXPECT_EQ(t.header[1], "name, full");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][1], "a \"b\"");
  EXPECT_EQ(t.rows[1][2], "multi\nline");
}

TEST(Csv, ArityMismatchNamesRow) {
  try {
    parse_csv("a,b\n1,2\n3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::malformed_csv);
    EXPECT_EQ(e.row(), 2u);
  }
}

TEST(Csv, EmptyInputHasNoHeader) {
  EXPECT_THROW(parse_csv(""), Error);
}

TEST(Csv, MissingColumnListsHeader) {
  const auto t = parse_csv("a,b\n1,2\n");
  try {
    t.require_column("c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::missing_column);
    EXPECT_EQ(e.details(), (std::vector<std::string>{"a", "b"}));
  }
}

TEST(Csv, WriteThenParseRoundTrips) {
  AttributeTable t;
  t.header = {"id", "text"};
  t.rows = {{"1", "plain"}, {"2", "comma, quote \" and\nnewline"}, {"3", ""}};
  const auto back = parse_csv(write_csv(t));
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
}

TEST(Errors, NamesAreCamelCase) {
  EXPECT_EQ(to_string(ErrorCode::unknown_node_reference), "UnknownNodeReference");
  const Error e(ErrorCode::zero_distance, "d(0,1) = 0");
  EXPECT_STREQ(e.what(), "ZeroDistance: d(0,1) = 0");
}
