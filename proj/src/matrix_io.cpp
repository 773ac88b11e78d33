#include "zq/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zq {

std::string format_diagnostic(const Diagnostic& d, std::string_view source_name) {
  std::ostringstream os;
  os << source_name << ':' << d.line << ':' << d.column << ": " << d.message;
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::optional<double> parse_real(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (token.front() == '+') token.remove_prefix(1);
  if (token.empty() || token.front() == '+') return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<Complex> parse_complex(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (token.back() != 'i') {
    const auto re = parse_real(token);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  token.remove_suffix(1);
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = token.size(); k-- > 1;) {
    if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view real_part = split == std::string_view::npos ? "" : token.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? token : token.substr(split);

  double re = 0.0;
  if (!real_part.empty()) {
    const auto parsed = parse_real(real_part);
    if (!parsed) return std::nullopt;
    re = *parsed;
  }
  double im = 0.0;
  if (imag_part.empty() || imag_part == "+") {
    im = 1.0;
  } else if (imag_part == "-") {
    im = -1.0;
  } else {
    const auto parsed = parse_real(imag_part);
    if (!parsed) return std::nullopt;
    im = *parsed;
  }
  return Complex(re, im);
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex c) {
  std::string out = format_real(c.real());
  double im = c.imag();
  if (im == 0.0) im = 0.0;
  if (std::signbit(im)) {
    out += '-';
    out += format_real(-im);
  } else {
    out += '+';
    out += format_real(im);
  }
  out += 'i';
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    const std::size_t start = k;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

std::vector<NumberedLine> significant_lines(std::string_view text) {
  std::vector<NumberedLine> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    std::size_t end = line.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
    if (end > lead) out.push_back({line_no, lead + 1, line.substr(lead, end - lead)});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

Parsed<ComplexMatrix> parse_matrix_lines(std::span<const NumberedLine> lines) {
  Parsed<ComplexMatrix> result;
  if (lines.empty()) {
    result.diagnostics.push_back({1, 1, "matrix has no rows"});
    return result;
  }
  std::vector<Complex> entries;
  std::size_t cols = 0;
  for (const auto& nl : lines) {
    const auto tokens = split_whitespace(nl.text);
    if (cols == 0) cols = tokens.size();
    if (tokens.size() != cols) {
      result.diagnostics.push_back({nl.line, nl.column,
                                    "row has " + std::to_string(tokens.size()) +
                                        " entries, expected " + std::to_string(cols)});
      continue;
    }
    for (const auto tok : tokens) {
      const auto c = parse_complex(tok);
      if (!c) {
        const std::size_t col = nl.column + static_cast<std::size_t>(tok.data() - nl.text.data());
        result.diagnostics.push_back({nl.line, col, "invalid complex entry '" + std::string(tok) + "'"});
        entries.emplace_back(0.0);
      } else {
        entries.push_back(*c);
      }
    }
  }
  if (result.diagnostics.empty())
    result.value = ComplexMatrix(lines.size(), cols, std::move(entries));
  return result;
}

Parsed<ComplexMatrix> parse_matrix(std::string_view text) {
  const auto lines = significant_lines(text);
  return parse_matrix_lines(lines);
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_complex(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace zq
