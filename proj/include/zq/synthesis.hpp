#pragma once

// Gate synthesis from classical truth tables.
//
// A reversible function is quantized by sending the i-th basis vector of
// each input's logical subspace to the i-th basis vector of the output's
// logical subspace, and fixing every fixed-complement direction. An
// irreversible f: {0,1}^m -> {0,1}^n is first closed to the bijection
// (x, y) -> (x, f(x) XOR y) on m + n bits.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zq/encodings.hpp"
#include "zq/linalg.hpp"

namespace zq {

class ClassicalFunction {
 public:
  /// table[x] is the output for input x, both read with the first bit most
  /// significant. Throws ContractViolation if the table is not total or an
  /// output does not fit in arity_out bits.
  ClassicalFunction(std::size_t arity_in, std::size_t arity_out, std::vector<std::uint64_t> table);

  static ClassicalFunction identity(std::size_t bits);
  static ClassicalFunction constant(std::size_t arity_in, std::size_t arity_out, std::uint64_t value);
  /// Bitwise negation on one bit.
  static ClassicalFunction negation();
  /// (x1, x2) -> (x1, x1 XOR x2).
  static ClassicalFunction conditional_not();
  /// (x1, x2) -> (x2, x1).
  static ClassicalFunction swap();

  std::size_t arity_in() const noexcept { return arity_in_; }
  std::size_t arity_out() const noexcept { return arity_out_; }
  bool reversible() const noexcept { return reversible_; }
  std::span<const std::uint64_t> table() const noexcept { return table_; }

  std::uint64_t operator()(std::uint64_t x) const { return table_.at(x); }
  BitString operator()(const BitString& x) const;

  friend bool operator==(const ClassicalFunction&, const ClassicalFunction&) = default;

 private:
  std::size_t arity_in_;
  std::size_t arity_out_;
  std::vector<std::uint64_t> table_;
  bool reversible_;
};

/// f . g (apply g first). Arities must chain.
ClassicalFunction compose(const ClassicalFunction& f, const ClassicalFunction& g);

/// (x, y) -> (x, f(x) XOR y) on arity_in + arity_out bits.
ClassicalFunction reversible_closure(const ClassicalFunction& f);

enum class SynthesisRule { Reversible, Irreversible };

struct SynthesizedGate {
  ComplexMatrix matrix;
  EncodingRef encoding;
  ClassicalFunction source;
  SynthesisRule rule;
  std::size_t subsystem_count;
};

inline constexpr std::size_t kMaxSynthesisDim = 1024;

SynthesizedGate quantize_reversible(const ClassicalFunction& f, const EncodingRef& enc);
SynthesizedGate quantize_irreversible(const ClassicalFunction& f, const EncodingRef& enc);

/// diag(I_2, u) for a 2x2 unitary u.
ComplexMatrix controlled(const ComplexMatrix& u);

ComplexMatrix sqrt_gate(const SynthesizedGate& g);

struct QuantizationReport {
  bool unitary = false;
  std::vector<std::string> violations;

  bool ok() const noexcept { return unitary && violations.empty(); }
};

/// Checks u against f (or f's reversible closure, when f is irreversible):
/// unitarity, each logical subspace mapped into its image, and the fixed
/// complement mapped into itself. Violations name the offending subspace.
QuantizationReport check_quantization(const ComplexMatrix& u, const ClassicalFunction& f,
                                      const Encoding& enc, double tol);

bool is_quantization_of(const ComplexMatrix& u, const ClassicalFunction& f, const Encoding& enc,
                        double tol);

/// P with P e_j = e_{perm[j]}.
ComplexMatrix permutation_matrix(std::span<const std::size_t> perm);

inline constexpr std::size_t kMaxEnumerationDim = 8;
inline constexpr double kEnumerationTolerance = 1e-9;

/// All permutation matrices that quantize f, ordered lexicographically by
/// one-line permutation notation. Candidates are checked in parallel.
std::vector<ComplexMatrix> enumerate_permutation_quantizations(const ClassicalFunction& f,
                                                               const EncodingRef& enc);

/// Single-threaded reference walking std::next_permutation.
std::vector<ComplexMatrix> enumerate_permutation_quantizations_serial(const ClassicalFunction& f,
                                                                      const EncodingRef& enc);

}  // namespace zq
