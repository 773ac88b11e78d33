#include "zq/entanglement.hpp"

namespace zq {

std::string to_string(Bipartite b) { return b == Bipartite::Separable ? "Separable" : "Entangled"; }

ComplexMatrix coefficient_matrix(const ComplexVector& amplitudes, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0) throw DimensionError("coefficient_matrix: dimensions must be positive");
  if (amplitudes.dim() != dim_a * dim_b)
    throw DimensionError("coefficient_matrix: state dimension " + std::to_string(amplitudes.dim()) +
                         " != " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
  return unres(amplitudes, dim_a, dim_b);
}

ComplexMatrix coefficient_matrix(const QuantumState& s, std::size_t dim_a, std::size_t dim_b) {
  return coefficient_matrix(s.amplitudes(), dim_a, dim_b);
}

SchmidtResult schmidt(const ComplexVector& amplitudes, std::size_t dim_a, std::size_t dim_b) {
  if (amplitudes.norm_squared() == 0.0) throw ContractViolation("schmidt: zero state");
  const ComplexMatrix m = coefficient_matrix(amplitudes.normalized(), dim_a, dim_b);
  SvdResult d = svd(m);
  SchmidtResult out;
  out.rank = numerical_rank(d.s);
  out.coefficients = std::move(d.s);
  out.left_basis = std::move(d.u);
  // M = U S V^dagger means psi = sum_k s_k u_k (x) conj(v_k).
  std::vector<Complex> right(d.v.entries().begin(), d.v.entries().end());
  for (auto& z : right) z = std::conj(z);
  out.right_basis = ComplexMatrix(d.v.rows(), d.v.cols(), std::move(right));
  return out;
}

SchmidtResult schmidt(const QuantumState& s, std::size_t dim_a, std::size_t dim_b) {
  return schmidt(s.amplitudes(), dim_a, dim_b);
}

Bipartite classify_bipartite(const ComplexVector& amplitudes, std::size_t dim_a, std::size_t dim_b) {
  return schmidt(amplitudes, dim_a, dim_b).rank == 1 ? Bipartite::Separable : Bipartite::Entangled;
}

Bipartite classify_bipartite(const QuantumState& s, std::size_t dim_a, std::size_t dim_b) {
  return classify_bipartite(s.amplitudes(), dim_a, dim_b);
}

}  // namespace zq
