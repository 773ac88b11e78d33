#pragma once

// Dense complex linear algebra for desk-scale (<= 64 dim) problems.
//
// Everything here is a value type. Flattening conventions are row-major
// throughout, and Kronecker products put the first factor in the most
// significant index position.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zq {

using Complex = std::complex<double>;

/// Raised when an argument violates a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when operand shapes do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative method fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);
  ComplexVector(std::initializer_list<Complex> entries);

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// Checked write; rejects non-finite values.
  void set(std::size_t i, Complex value);

  double norm() const;
  double norm_squared() const;
  ComplexVector normalized() const;

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> entries_;
};

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Complex c, const ComplexVector& v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// Column vector (dim x 1).
  static ComplexMatrix column(const ComplexVector& v);
  /// Matrix whose columns are the given vectors.
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  void set(std::size_t i, std::size_t j, Complex value);

  ComplexVector column_vector(std::size_t j) const;
  ComplexVector row_vector(std::size_t i) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double frobenius_norm() const;
  Complex trace() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, const ComplexMatrix& m);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);

/// A (rows, cols, slice_count) array used to act on matrix-shaped states.
class Gate3Tensor {
 public:
  explicit Gate3Tensor(std::vector<ComplexMatrix> slices);

  std::size_t rows() const noexcept { return slices_.front().rows(); }
  std::size_t cols() const noexcept { return slices_.front().cols(); }
  std::size_t slice_count() const noexcept { return slices_.size(); }
  const ComplexMatrix& slice(std::size_t k) const { return slices_.at(k); }
  std::span<const ComplexMatrix> slices() const noexcept { return slices_; }

  friend bool operator==(const Gate3Tensor&, const Gate3Tensor&) = default;

 private:
  std::vector<ComplexMatrix> slices_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

struct SvdResult {
  ComplexMatrix u;        // rows x k, orthonormal columns
  std::vector<double> s;  // k = min(rows, cols), descending
  ComplexMatrix v;        // cols x k, orthonormal columns
};

/// Thin SVD by one-sided Jacobi; m = u * diag(s) * v^dagger.
SvdResult svd(const ComplexMatrix& m);

/// Count of singular values above 1e-10 * s_max; 0 for the zero matrix.
std::size_t numerical_rank(std::span<const double> singular_values);

inline constexpr double kRankTolerance = 1e-10;

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns
};

/// Cyclic complex Jacobi. Input must be Hermitian to 1e-12 relative.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

struct UnitaryEigen {
  std::vector<Complex> values;  // unit modulus
  ComplexMatrix vectors;        // unitary, columns are eigenvectors
};

UnitaryEigen unitary_eigen(const ComplexMatrix& u);

/// Square root with eigenphases halved on the branch theta in (-pi, pi].
ComplexMatrix principal_unitary_sqrt(const ComplexMatrix& u);

/// Row-major flattening.
ComplexVector res(const ComplexMatrix& m);
ComplexMatrix unres(const ComplexVector& v, std::size_t rows, std::size_t cols);

/// y_k = trace(slice_k * x), reshaped row-major to x's shape.
ComplexMatrix tensor_apply(const Gate3Tensor& t, const ComplexMatrix& x);

/// Tensor whose action equals unres(g * res(x)) on rows x cols states.
Gate3Tensor tensor_from_matrix(const ComplexMatrix& g, std::size_t rows, std::size_t cols);

/// Matrix G with row k equal to res(slice_k^T).
ComplexMatrix tensor_to_matrix(const Gate3Tensor& t);

std::optional<Complex> equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                         double tol);

bool is_unitary(const ComplexMatrix& m, double tol);

}  // namespace zq
