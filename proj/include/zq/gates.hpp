#pragma once

// Named gate library shared by the circuit parser and the CLI.

#include <optional>
#include <string>
#include <string_view>

#include "zq/encodings.hpp"
#include "zq/linalg.hpp"

namespace zq {

ComplexMatrix pauli_x();
/// Unitary Hadamard, normalized by 1/sqrt(2).
ComplexMatrix hadamard();
/// diag(1, e^{i phi}).
ComplexMatrix phase_gate(double phi);
ComplexMatrix cnot();
ComplexMatrix swap_gate();

struct NamedGate {
  ComplexMatrix matrix;
  std::size_t arity;
};

/// Gate names valid in circuits: NOT, SQRT_NOT, CNOT, SWAP (synthesized for
/// any encoding), and H, R (qubit encoding only; R takes `param`).
bool is_builtin_gate_name(std::string_view name);
/// Number of targets a builtin gate acts on; 0 if not builtin.
std::size_t builtin_gate_arity(std::string_view name);
/// Throws ContractViolation for unknown names or encodings the gate does not
/// support.
NamedGate resolve_builtin_gate(std::string_view name, std::optional<double> param, const EncodingRef& enc);

}  // namespace zq
