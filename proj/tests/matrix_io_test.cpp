#include "zq/matrix_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace zq {
namespace {

using testing::kI;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1"), Complex(1.0));
  EXPECT_EQ(parse_complex("-2.5"), Complex(-2.5));
  EXPECT_EQ(parse_complex("i"), kI);
  EXPECT_EQ(parse_complex("-i"), -kI);
  EXPECT_EQ(parse_complex("3i"), Complex(0, 3));
  EXPECT_EQ(parse_complex("1+i"), Complex(1, 1));
  EXPECT_EQ(parse_complex("0.5-0.25i"), Complex(0.5, -0.25));
  EXPECT_EQ(parse_complex("1e-3+2E+2i"), Complex(1e-3, 200));
  EXPECT_EQ(parse_complex("-1e2-1e-2i"), Complex(-100, -0.01));
}

TEST(ParseComplex, Rejects) {
  for (const char* bad : {"", "x", "1+", "1+2", "i1", "1 +2i", "1++2i", "nan", "inf", "2ii", "1e"})
    EXPECT_FALSE(parse_complex(bad).has_value()) << bad;
}

TEST(FormatComplex, Shapes) {
  EXPECT_EQ(format_complex(Complex(1, 0)), "1+0i");
  EXPECT_EQ(format_complex(Complex(0.5, -0.5)), "0.5-0.5i");
  EXPECT_EQ(format_complex(Complex(-0.0, 0)), "0+0i");
  EXPECT_EQ(format_real(0.1), "0.1");
}

TEST(ParseMatrix, CommentsAndBlankLines) {
  const auto p = parse_matrix("# header\n\n1 0\n0   1  # trailing\n");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(*p.value, ComplexMatrix::identity(2));
}

TEST(ParseMatrix, Diagnostics) {
  const auto ragged = parse_matrix("1 0\n0 1 0\n");
  ASSERT_FALSE(ragged.ok());
  EXPECT_EQ(ragged.diagnostics[0].line, 2u);

  const auto bad = parse_matrix("1 0\n0 x\n");
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.diagnostics[0].line, 2u);
  EXPECT_EQ(bad.diagnostics[0].column, 3u);

  const auto empty = parse_matrix("# nothing\n");
  ASSERT_FALSE(empty.ok());
  EXPECT_GE(empty.diagnostics[0].line, 1u);
}

TEST(MatrixIoProperty, PrintParseRoundTripIsExact) {
  std::mt19937_64 rng(501);
  std::uniform_real_distribution<double> mag(-30, 30);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = testing::random_matrix(rng, 1 + trial % 5, 1 + trial % 4);
    if (trial % 3 == 0) m = Complex(std::pow(10.0, mag(rng))) * m;
    const auto back = parse_matrix(format_matrix(m));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back.value, m);
  }
}

TEST(SignificantLines, NumbersAndColumns) {
  const auto lines = significant_lines("# c\n  a b\n\nc # d\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].line, 2u);
  EXPECT_EQ(lines[0].column, 3u);
  EXPECT_EQ(lines[0].text, "a b");
  EXPECT_EQ(lines[1].line, 4u);
  EXPECT_EQ(lines[1].text, "c");
}

TEST(FormatDiagnostic, Layout) { EXPECT_EQ(format_diagnostic({3, 7, "oops"}, "f.tt"), "f.tt:3:7: oops"); }

TEST(ReadTextFile, MissingFile) { EXPECT_THROW(read_text_file("/nonexistent/zq/file"), IoError); }

}  // namespace
}  // namespace zq
