#pragma once

// Text formats:
//
// Truth table
//   in <m> out <n>
//   <m-bit string> -> <n-bit string>      (one line per input, all 2^m)
//
// Encoding description
//   dim <d>
//   0:            basis vectors of the logical-0 subspace, one per line
//   1:            basis vectors of the logical-1 subspace
//   fixed:        optional fixed-complement directions
//
// Circuit
//   encoding <builtin name | encoding file>
//   width <n>
//   GATE t0 [t1 ...]
// where GATE is NOT, SQRT_NOT, H, R(<phi>), CNOT, SWAP, C(<2x2 matrix file>)
// or the path of a matrix file. A token is read as a path when it contains
// '.' or '/'; any other unknown word is an unknown gate.
//
// Every format accepts '#' comments and blank lines.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zq/diagnostics.hpp"
#include "zq/encodings.hpp"
#include "zq/simulator.hpp"
#include "zq/synthesis.hpp"

namespace zq {

Parsed<ClassicalFunction> parse_truth_table(std::string_view text);
std::string format_truth_table(const ClassicalFunction& f);

Parsed<Encoding> parse_encoding_description(std::string_view text, std::string name);

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct CircuitStatement {
  enum class Kind { Builtin, Controlled, MatrixFile };
  Kind kind = Kind::Builtin;
  std::string gate;               // builtin name; empty otherwise
  std::optional<double> param;    // R(<phi>)
  std::string path;               // Controlled / MatrixFile
  std::vector<std::size_t> targets;
  SourcePos pos;

  /// Structural equality ignores source positions.
  bool same_structure(const CircuitStatement& other) const;
};

struct CircuitDocument {
  std::string encoding;  // builtin name or file path
  std::size_t width = 0;
  std::vector<CircuitStatement> statements;
  SourcePos encoding_pos;
  SourcePos width_pos;

  bool same_structure(const CircuitDocument& other) const;
};

Parsed<CircuitDocument> parse_circuit(std::string_view text);
std::string format_circuit(const CircuitDocument& doc);

/// Resolves an `encoding` value: builtin names first, then a description
/// file relative to base_dir.
Parsed<EncodingRef> load_encoding(const std::string& spec, const std::filesystem::path& base_dir);

/// Loads files referenced by the document and builds the circuit. File paths
/// resolve relative to base_dir.
Parsed<Circuit> build_circuit(const CircuitDocument& doc, const std::filesystem::path& base_dir);

}  // namespace zq
