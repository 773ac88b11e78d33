#pragma once

// Matrix text format: one row per line, whitespace-separated entries,
// complex entries written a+bi / a-bi, '#' lines are comments. Printing
// uses the shortest decimal that round-trips, so print -> parse is exact.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zq/diagnostics.hpp"
#include "zq/linalg.hpp"

namespace zq {

std::optional<Complex> parse_complex(std::string_view token);
std::optional<double> parse_real(std::string_view token);

std::string format_real(double x);
std::string format_complex(Complex c);

Parsed<ComplexMatrix> parse_matrix(std::string_view text);

/// Rows of whitespace-separated entries from `lines` (already split),
/// with diagnostics using the supplied line numbers.
struct NumberedLine {
  std::size_t line;
  std::size_t column;  // 1-based column of text.front() in the source line
  std::string_view text;
};
Parsed<ComplexMatrix> parse_matrix_lines(std::span<const NumberedLine> lines);

std::string format_matrix(const ComplexMatrix& m);

/// Splits into lines, strips '#' comments and surrounding whitespace, and
/// drops blank lines. Line numbers are 1-based.
std::vector<NumberedLine> significant_lines(std::string_view text);

std::vector<std::string_view> split_whitespace(std::string_view s);

}  // namespace zq
