#pragma once

// Classical bit -> quantum encodings.
//
// An encoding assigns each bit value an orthonormal basis of a logical
// subspace inside C^d; directions outside both subspaces are listed as the
// fixed complement. Multi-bit states live in the n-fold Kronecker power,
// with the first bit as the most significant factor.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zq/linalg.hpp"

namespace zq {

/// A string over {0,1}; index 0 is the first (most significant) bit.
class BitString {
 public:
  BitString() = default;
  /// Throws ContractViolation on characters other than '0'/'1'.
  explicit BitString(std::string_view bits);
  static BitString from_value(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  std::uint64_t value() const noexcept;
  const std::string& str() const noexcept { return bits_; }

  BitString operator+(const BitString& tail) const { return BitString(bits_ + tail.bits_); }
  BitString substr(std::size_t pos, std::size_t len) const { return BitString(bits_.substr(pos, len)); }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::string bits_;
};

struct Encoding {
  std::string name;
  std::size_t ambient_dim = 0;
  std::vector<ComplexVector> basis0;
  std::vector<ComplexVector> basis1;
  std::vector<ComplexVector> fixed_complement;

  const std::vector<ComplexVector>& basis(int bit) const { return bit ? basis1 : basis0; }
  /// basis0, then basis1, then fixed_complement: an orthonormal basis of C^d.
  std::vector<ComplexVector> ambient_basis() const;

  friend bool operator==(const Encoding&, const Encoding&) = default;
};

using EncodingRef = std::shared_ptr<const Encoding>;

/// Throws ContractViolation listing the first violated invariant.
void validate_encoding(const Encoding& enc, double tol = 1e-12);

/// Validates and wraps.
EncodingRef make_encoding(Encoding enc);

/// One of qubit, qutrit, ququart, matrix2, pauli.
EncodingRef builtin_encoding(std::string_view name);
const std::vector<std::string>& builtin_encoding_names();

class QuantumState {
 public:
  QuantumState(ComplexVector amplitudes, EncodingRef encoding, std::size_t subsystem_count);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  const Encoding& encoding() const noexcept { return *encoding_; }
  const EncodingRef& encoding_ref() const noexcept { return encoding_; }
  std::size_t subsystem_count() const noexcept { return subsystems_; }

  QuantumState normalized() const;
  QuantumState with_amplitudes(ComplexVector amplitudes) const;

 private:
  ComplexVector amplitudes_;
  EncodingRef encoding_;
  std::size_t subsystems_;
};

/// d^n, or throws DimensionError on overflow past 2^62.
std::size_t power_dim(std::size_t d, std::size_t n);

QuantumState encode_bits(const EncodingRef& enc, const BitString& bits);

/// Orthonormal basis of S_{b0} (x) ... (x) S_{b(n-1)}, lexicographic in the
/// per-bit basis indices.
std::vector<ComplexVector> logical_subspace(const Encoding& enc, const BitString& bits);

/// Basis of the n-fold directions with at least one fixed-complement factor.
std::vector<ComplexVector> complement_subspace(const Encoding& enc, std::size_t n);

struct StateClass {
  enum class Kind { Logical, Superposition, OutsideCode };
  Kind kind;
  BitString bits;  // set when kind == Logical

  friend bool operator==(const StateClass&, const StateClass&) = default;
};

std::string to_string(const StateClass& c);

/// Squared norm of the projection of v onto span(basis); basis orthonormal.
double projected_weight(std::span<const ComplexVector> basis, const ComplexVector& v);

StateClass classify_state(const Encoding& enc, const QuantumState& s, double tol);

}  // namespace zq
