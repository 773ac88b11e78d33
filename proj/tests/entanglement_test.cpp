#include "zq/entanglement.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace zq {
namespace {

using testing::kI;
using testing::kInvSqrt2;
namespace golden = testing::golden;

double sum_squares(const std::vector<double>& c) {
  double s = 0;
  for (double x : c) s += x * x;
  return s;
}

ComplexVector reconstruct(const SchmidtResult& r) {
  ComplexVector out(r.left_basis.rows() * r.right_basis.rows());
  for (std::size_t k = 0; k < r.coefficients.size(); ++k)
    out = out + Complex(r.coefficients[k]) * kron(r.left_basis.column_vector(k), r.right_basis.column_vector(k));
  return out;
}

TEST(CoefficientMatrix, Examples) {
  EXPECT_LE(max_abs_diff(coefficient_matrix(golden::psi_plus(), 2, 2), golden::psi_plus_coefficients()), 0.0);
  EXPECT_EQ(coefficient_matrix(ComplexVector{1, 0, 0, 0}, 2, 2), (ComplexMatrix{{1, 0}, {0, 0}}));
  const ComplexVector prod = Complex(0.5) * kron(ComplexVector{1, 1}, ComplexVector{1, -kI});
  EXPECT_EQ(coefficient_matrix(prod, 2, 2), (Complex(0.5) * ComplexMatrix{{1, -kI}, {1, -kI}}));
  EXPECT_THROW(coefficient_matrix(ComplexVector{1, 0, 0}, 2, 2), DimensionError);
}

TEST(Schmidt, BellState) {
  const auto r = schmidt(golden::psi_plus(), 2, 2);
  ASSERT_EQ(r.coefficients.size(), 2u);
  EXPECT_NEAR(r.coefficients[0], kInvSqrt2, 1e-10);
  EXPECT_NEAR(r.coefficients[1], kInvSqrt2, 1e-10);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(classify_bipartite(golden::psi_plus(), 2, 2), Bipartite::Entangled);
}

TEST(Schmidt, ProductBasisState) {
  const auto r = schmidt(ComplexVector{1, 0, 0, 0}, 2, 2);
  EXPECT_DOUBLE_EQ(r.coefficients[0], 1.0);
  EXPECT_DOUBLE_EQ(r.coefficients[1], 0.0);
  EXPECT_EQ(r.rank, 1u);
}

TEST(Schmidt, ZeroStateRejected) { EXPECT_THROW(schmidt(ComplexVector(4), 2, 2), ContractViolation); }

TEST(Schmidt, QuantumStateOverload) {
  const auto q = builtin_encoding("qubit");
  const QuantumState s(Complex(3.0) * golden::psi_plus(), q, 2);
  EXPECT_NEAR(schmidt(s, 2, 2).coefficients[0], kInvSqrt2, 1e-12);
  EXPECT_EQ(classify_bipartite(s, 2, 2), Bipartite::Entangled);
}

TEST(ClassifyBipartite, Examples) {
  EXPECT_EQ(classify_bipartite(ComplexVector{0, 1, 0, 0}, 2, 2), Bipartite::Separable);
  EXPECT_EQ(classify_bipartite(ComplexVector{0.5, 0.5, 0.5, 0.5}, 2, 2), Bipartite::Separable);
  EXPECT_EQ(to_string(Bipartite::Separable), "Separable");
  EXPECT_EQ(to_string(Bipartite::Entangled), "Entangled");
}

TEST(SchmidtProperty, RandomProductStatesAreRankOne) {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = 2 + trial % 4, b = 2 + (trial / 4) % 3;
    const auto s = kron(testing::random_vector(rng, a), testing::random_vector(rng, b));
    EXPECT_EQ(schmidt(s, a, b).rank, 1u);
    EXPECT_EQ(classify_bipartite(s, a, b), Bipartite::Separable);
  }
}

TEST(SchmidtProperty, LocalUnitaryInvariance) {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = 2 + trial % 3, b = 2 + (trial / 3) % 3;
    const auto s = testing::random_vector(rng, a * b);
    const auto u = testing::random_unitary(rng, a);
    const auto v = testing::random_unitary(rng, b);
    const auto c1 = schmidt(s, a, b).coefficients;
    const auto c2 = schmidt(kron(u, v) * s, a, b).coefficients;
    ASSERT_EQ(c1.size(), c2.size());
    for (std::size_t k = 0; k < c1.size(); ++k) EXPECT_NEAR(c1[k], c2[k], 1e-9);
  }
}

TEST(SchmidtProperty, CoefficientsNormalizedAndRankBounded) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = 1 + trial % 6, b = 1 + (trial / 6) % 6;
    const auto r = schmidt(testing::random_vector(rng, a * b), a, b);
    EXPECT_NEAR(sum_squares(r.coefficients), 1.0, 1e-10);
    EXPECT_LE(r.rank, std::min(a, b));
  }
}

TEST(SchmidtProperty, ReconstructsNormalizedState) {
  std::mt19937_64 rng(304);
  for (int trial = 0; trial < 64; ++trial) {
    const std::size_t a = 1 + trial % 8, b = 1 + trial / 8;
    const auto s = testing::random_vector(rng, a * b);
    const auto r = schmidt(s, a, b);
    EXPECT_LE((reconstruct(r) - s.normalized()).norm(), 1e-9) << a << 'x' << b;
  }
}

TEST(SchmidtProperty, RotatedBellStatesStayMaximallyEntangled) {
  std::mt19937_64 rng(305);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = kron(testing::random_unitary(rng, 2), testing::random_unitary(rng, 2)) * golden::psi_plus();
    const auto r = schmidt(s, 2, 2);
    EXPECT_NEAR(r.coefficients[0], kInvSqrt2, 1e-9);
    EXPECT_NEAR(r.coefficients[1], kInvSqrt2, 1e-9);
    EXPECT_EQ(classify_bipartite(s, 2, 2), Bipartite::Entangled);
  }
}

}  // namespace
}  // namespace zq
