#pragma once

// Schmidt decomposition of bipartite pure states.

#include <string>
#include <vector>

#include "zq/encodings.hpp"
#include "zq/linalg.hpp"

namespace zq {

struct SchmidtResult {
  std::vector<double> coefficients;  // descending; squares sum to 1
  std::size_t rank = 0;
  ComplexMatrix left_basis;   // dim_a x k, columns
  ComplexMatrix right_basis;  // dim_b x k, columns
};

enum class Bipartite { Separable, Entangled };

std::string to_string(Bipartite b);

/// Entry (i, j) is the amplitude of |i> (x) |j>.
ComplexMatrix coefficient_matrix(const ComplexVector& amplitudes, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix coefficient_matrix(const QuantumState& s, std::size_t dim_a, std::size_t dim_b);

/// The state is normalized first, so sum_k coeff_k (left_k (x) right_k)
/// reconstructs s / |s|.
SchmidtResult schmidt(const ComplexVector& amplitudes, std::size_t dim_a, std::size_t dim_b);
SchmidtResult schmidt(const QuantumState& s, std::size_t dim_a, std::size_t dim_b);

/// Separable iff the Schmidt rank is 1.
Bipartite classify_bipartite(const ComplexVector& amplitudes, std::size_t dim_a, std::size_t dim_b);
Bipartite classify_bipartite(const QuantumState& s, std::size_t dim_a, std::size_t dim_b);

}  // namespace zq
