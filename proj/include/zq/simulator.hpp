#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zq/encodings.hpp"
#include "zq/linalg.hpp"

namespace zq {

/// Ambient size limit: d^n <= 2^20.
inline constexpr std::size_t kMaxAmbientQubits = 20;

struct CircuitStep {
  std::variant<ComplexMatrix, Gate3Tensor> gate;
  std::vector<std::size_t> targets;
  std::string label;
};

class Circuit {
 public:
  Circuit(EncodingRef encoding, std::size_t width);

  /// Throws DimensionError / ContractViolation if the gate dimension is not
  /// d^|targets| or targets repeat or fall outside the width.
  void add(CircuitStep step);

  const Encoding& encoding() const noexcept { return *encoding_; }
  const EncodingRef& encoding_ref() const noexcept { return encoding_; }
  std::size_t width() const noexcept { return width_; }
  std::span<const CircuitStep> steps() const noexcept { return steps_; }

 private:
  EncodingRef encoding_;
  std::size_t width_;
  std::vector<CircuitStep> steps_;
};

void check_targets(std::span<const std::size_t> targets, std::size_t width);

QuantumState apply_gate(const QuantumState& s, const ComplexMatrix& g, std::span<const std::size_t> targets);

/// Acts on a single matrix-shaped state through slice traces.
ComplexMatrix apply_tensor_gate_matrixenc(const ComplexMatrix& x, const Gate3Tensor& t);

QuantumState run_circuit(const Circuit& c, const BitString& input_bits);

struct BasisProbability {
  std::size_t index;
  double probability;
};

std::vector<BasisProbability> basis_probabilities(const QuantumState& s);

/// "|d0 d1 ...>" digits of an ambient index, one per subsystem.
std::string basis_label(std::size_t index, std::size_t local_dim, std::size_t subsystems);

}  // namespace zq
