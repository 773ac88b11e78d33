#include "zq/simulator.hpp"

#include <algorithm>

#include "zq/kernels.hpp"

namespace zq {

namespace {

void check_width(std::size_t local_dim, std::size_t width) {
  std::size_t dim = 1;
  for (std::size_t k = 0; k < width; ++k) {
    dim *= local_dim;
    if (dim > (std::size_t{1} << kMaxAmbientQubits))
      throw ContractViolation("circuit too large: ambient dimension exceeds 2^" +
                              std::to_string(kMaxAmbientQubits));
  }
}

}  // namespace

void check_targets(std::span<const std::size_t> targets, std::size_t width) {
  if (targets.empty()) throw ContractViolation("gate needs at least one target");
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] >= width)
      throw DimensionError("target " + std::to_string(targets[a]) + " out of range for width " +
                           std::to_string(width));
    for (std::size_t b = a + 1; b < targets.size(); ++b)
      if (targets[a] == targets[b]) throw ContractViolation("target " + std::to_string(targets[a]) + " repeated");
  }
}

Circuit::Circuit(EncodingRef encoding, std::size_t width) : encoding_(std::move(encoding)), width_(width) {
  if (!encoding_) throw ContractViolation("Circuit: null encoding");
  if (width_ == 0) throw ContractViolation("Circuit: width must be positive");
  check_width(encoding_->ambient_dim, width_);
}

void Circuit::add(CircuitStep step) {
  check_targets(step.targets, width_);
  const std::size_t expected = power_dim(encoding_->ambient_dim, step.targets.size());
  const std::size_t dim = std::visit(
      [](const auto& g) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, ComplexMatrix>) {
          if (!g.square()) throw DimensionError("gate matrix is not square");
          return g.rows();
        } else {
          if (g.slice_count() != g.rows() * g.cols())
            throw DimensionError("tensor gate needs rows*cols slices");
          return g.slice_count();
        }
      },
      step.gate);
  if (dim != expected)
    throw DimensionError("gate '" + step.label + "' has dimension " + std::to_string(dim) + ", expected " +
                         std::to_string(expected) + " for " + std::to_string(step.targets.size()) +
                         " target(s)");
  steps_.push_back(std::move(step));
}

QuantumState apply_gate(const QuantumState& s, const ComplexMatrix& g, std::span<const std::size_t> targets) {
  const std::size_t n = s.subsystem_count();
  const std::size_t d = s.encoding().ambient_dim;
  check_width(d, n);
  check_targets(targets, n);
  if (!g.square() || g.rows() != power_dim(d, targets.size()))
    throw DimensionError("apply_gate: gate dimension must be d^|targets|");
  if (!is_unitary(g, 1e-9)) throw ContractViolation("apply_gate: gate is not unitary");
  std::vector<Complex> out(s.amplitudes().dim());
  kernels::apply_gate(s.amplitudes().entries(), out, g, d, n, targets);
  return s.with_amplitudes(ComplexVector(std::move(out)));
}

ComplexMatrix apply_tensor_gate_matrixenc(const ComplexMatrix& x, const Gate3Tensor& t) {
  return tensor_apply(t, x);
}

QuantumState run_circuit(const Circuit& c, const BitString& input_bits) {
  if (input_bits.size() != c.width())
    throw DimensionError("run_circuit: input has " + std::to_string(input_bits.size()) + " bits, circuit width is " +
                         std::to_string(c.width()));
  QuantumState s = encode_bits(c.encoding_ref(), input_bits);
  for (const auto& step : c.steps()) {
    if (const auto* m = std::get_if<ComplexMatrix>(&step.gate)) {
      s = apply_gate(s, *m, step.targets);
    } else {
      s = apply_gate(s, tensor_to_matrix(std::get<Gate3Tensor>(step.gate)), step.targets);
    }
  }
  return s;
}

std::vector<BasisProbability> basis_probabilities(const QuantumState& s) {
  const double total = s.amplitudes().norm_squared();
  std::vector<BasisProbability> out(s.amplitudes().dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {i, std::norm(s.amplitudes()[i]) / total};
  return out;
}

std::string basis_label(std::size_t index, std::size_t local_dim, std::size_t subsystems) {
  std::vector<std::size_t> digits(subsystems);
  for (std::size_t q = subsystems; q-- > 0;) {
    digits[q] = index % local_dim;
    index /= local_dim;
  }
  std::string out = "|";
  for (std::size_t q = 0; q < subsystems; ++q) {
    if (q > 0 && local_dim > 10) out += ',';
    out += std::to_string(digits[q]);
  }
  return out + ">";
}

}  // namespace zq
