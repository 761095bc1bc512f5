// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "hcos/error.hpp"
#include "hcos/text_io.hpp"

namespace hcos {
namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_vector_text(text, "v.txt");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return {};
}

TEST(ParseVector, InlineAndLineForms) {
  EXPECT_EQ(parse_vector_text("0.6,0.8", "x"), (std::vector<double>{0.6, 0.8}));
  EXPECT_EQ(parse_vector_text(" 1 , -2.5e-1 ", "x"), (std::vector<double>{1.0, -0.25}));
  EXPECT_EQ(parse_vector_text("0.6\n0.8\n", "x"), (std::vector<double>{0.6, 0.8}));
  EXPECT_EQ(parse_vector_text("0.6\r\n\n0.8\r\n", "x"), (std::vector<double>{0.6, 0.8}));
}

TEST(ParseVector, ErrorsCarryLineAndColumn) {
  EXPECT_EQ(parse_error("0.5\n0.2,abc\n"), "v.txt:2:5: not a number: 'abc'");
  EXPECT_EQ(parse_error("1,,2"), "v.txt:1:3: missing value");
  EXPECT_EQ(parse_error("nan"), "v.txt:1:1: value out of range: 'nan'");
  EXPECT_EQ(parse_error("\n\n"), "v.txt: no values");
}

TEST(ParseMatrix, RaggedRowsRejected) {
  const auto m = parse_matrix_text("1,0\n0,1\n", "m");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[1], (std::vector<double>{0.0, 1.0}));
  EXPECT_THROW(parse_matrix_text("1,0\n0\n", "m"), Error);
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.96), "0.95999999999999996");
  EXPECT_EQ(format_double(-1.0), "-1");
  EXPECT_EQ(format_double(0.1 + 0.2), "0.30000000000000004");
}

TEST(Json, SortedKeysAndEscapes) {
  const std::string s = JsonObject()
                            .integer("zeta", 3)
                            .string("alpha", "a\"b")
                            .null("mid")
                            .number("nan", std::nan(""))
                            .dump();
  EXPECT_EQ(s, "{\"alpha\":\"a\\\"b\",\"mid\":null,\"nan\":null,\"zeta\":3}\n");
}

}  // namespace
}  // namespace hcos
