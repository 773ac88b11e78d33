#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zq {

/// A parse problem anchored at a 1-based line and column.
struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Result of a parse: either a value, or at least one diagnostic.
template <typename T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return value.has_value() && diagnostics.empty(); }
};

/// "name:line:col: message"
std::string format_diagnostic(const Diagnostic& d, std::string_view source_name);

/// Raised when a file cannot be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);

}  // namespace zq
