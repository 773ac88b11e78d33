#include "zq/gates.hpp"

#include <cmath>

#include "zq/synthesis.hpp"

namespace zq {

ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }

ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

ComplexMatrix phase_gate(double phi) { return {{1, 0}, {0, std::polar(1.0, phi)}}; }

ComplexMatrix cnot() { return controlled(pauli_x()); }

ComplexMatrix swap_gate() { return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}; }

std::size_t builtin_gate_arity(std::string_view name) {
  if (name == "NOT" || name == "SQRT_NOT" || name == "H" || name == "R") return 1;
  if (name == "CNOT" || name == "SWAP") return 2;
  return 0;
}

bool is_builtin_gate_name(std::string_view name) { return builtin_gate_arity(name) != 0; }

NamedGate resolve_builtin_gate(std::string_view name, std::optional<double> param, const EncodingRef& enc) {
  if (!enc) throw ContractViolation("resolve_builtin_gate: null encoding");
  if (name == "R" && !param) throw ContractViolation("R needs a phase argument, e.g. R(1.5707963267948966)");
  if (name != "R" && param) throw ContractViolation(std::string(name) + " takes no argument");
  if (name == "NOT") return {quantize_reversible(ClassicalFunction::negation(), enc).matrix, 1};
  if (name == "SQRT_NOT") return {sqrt_gate(quantize_reversible(ClassicalFunction::negation(), enc)), 1};
  if (name == "CNOT") return {quantize_reversible(ClassicalFunction::conditional_not(), enc).matrix, 2};
  if (name == "SWAP") return {quantize_reversible(ClassicalFunction::swap(), enc).matrix, 2};
  if (name == "H" || name == "R") {
    if (enc->ambient_dim != 2 || enc->name != "qubit")
      throw ContractViolation(std::string(name) + " has no classical counterpart and is only defined for the qubit encoding");
    return {name == "H" ? hadamard() : phase_gate(*param), 1};
  }
  throw ContractViolation("unknown gate '" + std::string(name) + "'");
}

}  // namespace zq
