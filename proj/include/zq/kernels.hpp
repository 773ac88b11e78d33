#pragma once

// State-vector gate application kernels.
//
// The amplitude vector of n subsystems of local dimension d is indexed
// base-d with subsystem 0 as the most significant digit. Both kernels
// compute out = (g acting on `targets`, identity elsewhere) * in, with
// targets[0] the most significant index of g.

#include <cstddef>
#include <span>

#include "zq/linalg.hpp"

namespace zq::kernels {

/// Stride/offset kernel, parallel over the untouched subsystems.
void apply_gate(std::span<const Complex> in, std::span<Complex> out, const ComplexMatrix& g,
                std::size_t local_dim, std::size_t subsystems, std::span<const std::size_t> targets);

/// Permutes target axes to the front, applies g (x) I, permutes back.
/// Single-threaded; kept as the test oracle for apply_gate.
void apply_gate_reference(std::span<const Complex> in, std::span<Complex> out, const ComplexMatrix& g,
                          std::size_t local_dim, std::size_t subsystems,
                          std::span<const std::size_t> targets);

}  // namespace zq::kernels
