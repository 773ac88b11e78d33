#include "zq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zq {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(std::span<const Complex> values, const char* what) {
  for (const auto& c : values) {
    if (!finite(c)) throw ContractViolation(std::string(what) + ": non-finite entry");
  }
}

// 2x2 unitary G = P * R with G^dagger [[a, b], [conj(b), d]] G diagonal,
// where P = diag(1, conj(b)/|b|) makes the off-diagonal real and R is the
// real Jacobi rotation [[c, s], [-s, c]].
struct Rotation {
  Complex g00, g01, g10, g11;
};

Rotation jacobi_rotation(double a, double d, Complex b) {
  const double mag = std::abs(b);
  const Complex w_bar = std::conj(b) / mag;
  const double tau = (d - a) / (2.0 * mag);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  return {c, s, -s * w_bar, c * w_bar};
}

// Columns p, q of m (row-major, n_cols wide) <- [col_p col_q] * G.
void rotate_columns(std::vector<Complex>& m, std::size_t n_rows, std::size_t n_cols,
                    std::size_t p, std::size_t q, const Rotation& g) {
  for (std::size_t k = 0; k < n_rows; ++k) {
    Complex& mp = m[k * n_cols + p];
    Complex& mq = m[k * n_cols + q];
    const Complex xp = mp;
    const Complex xq = mq;
    mp = xp * g.g00 + xq * g.g10;
    mq = xp * g.g01 + xq * g.g11;
  }
}

// Rows p, q of square m <- G^dagger * [row_p; row_q].
void rotate_rows(std::vector<Complex>& m, std::size_t n, std::size_t p, std::size_t q,
                 const Rotation& g) {
  for (std::size_t k = 0; k < n; ++k) {
    Complex& mp = m[p * n + k];
    Complex& mq = m[q * n + k];
    const Complex xp = mp;
    const Complex xq = mq;
    mp = std::conj(g.g00) * xp + std::conj(g.g10) * xq;
    mq = std::conj(g.g01) * xp + std::conj(g.g11) * xq;
  }
}

constexpr int kMaxSweeps = 100;
constexpr double kJacobiTolerance = 1e-14;

// Extends the given orthonormal columns of an m x k matrix to fill every
// column whose flag is false, by Gram-Schmidt over the standard basis.
void complete_orthonormal(std::vector<Complex>& u, std::size_t m, std::size_t k,
                          const std::vector<bool>& filled) {
  std::vector<bool> have = filled;
  std::size_t candidate = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (have[j]) continue;
    while (candidate < m) {
      std::vector<Complex> v(m, 0.0);
      v[candidate++] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < k; ++c) {
          if (!have[c]) continue;
          Complex dot = 0.0;
          for (std::size_t r = 0; r < m; ++r) dot += std::conj(u[r * k + c]) * v[r];
          for (std::size_t r = 0; r < m; ++r) v[r] -= dot * u[r * k + c];
        }
      }
      double nrm = 0.0;
      for (const auto& x : v) nrm += std::norm(x);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-6) {
        for (std::size_t r = 0; r < m; ++r) u[r * k + j] = v[r] / nrm;
        have[j] = true;
        break;
      }
    }
    if (!have[j]) throw NumericalError("svd: could not complete orthonormal basis");
  }
}

SvdResult svd_tall(const ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  std::vector<Complex> v(cols * cols, 0.0);
  for (std::size_t i = 0; i < cols; ++i) v[i * cols + i] = 1.0;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          const Complex ap = a[k * cols + p];
          const Complex aq = a[k * cols + q];
          alpha += std::norm(ap);
          beta += std::norm(aq);
          gamma += std::conj(ap) * aq;
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= kJacobiTolerance * std::sqrt(alpha * beta)) continue;
        converged = false;
        const Rotation g = jacobi_rotation(alpha, beta, gamma);
        rotate_columns(a, rows, cols, p, q, g);
        rotate_columns(v, cols, cols, p, q, g);
      }
    }
  }
  if (!converged) throw NumericalError("svd: Jacobi sweeps did not converge");

  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += std::norm(a[k * cols + j]);
    sigma[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double s_max = sigma.empty() ? 0.0 : sigma[order.front()];
  std::vector<Complex> u(rows * cols, 0.0);
  std::vector<Complex> v_sorted(cols * cols, 0.0);
  std::vector<double> s_sorted(cols);
  std::vector<bool> filled(cols, false);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    s_sorted[j] = sigma[src];
    for (std::size_t k = 0; k < cols; ++k) v_sorted[k * cols + j] = v[k * cols + src];
    if (sigma[src] > 1e-13 * s_max && sigma[src] > 0.0) {
      for (std::size_t k = 0; k < rows; ++k) u[k * cols + j] = a[k * cols + src] / sigma[src];
      filled[j] = true;
    }
  }
  complete_orthonormal(u, rows, cols, filled);
  return {ComplexMatrix(rows, cols, std::move(u)), std::move(s_sorted),
          ComplexMatrix(cols, cols, std::move(v_sorted))};
}

}  // namespace

// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : entries_(dim, 0.0) {}

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require_finite(entries_, "ComplexVector");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {
  require_finite(entries_, "ComplexVector");
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis: index out of range");
  ComplexVector v(dim);
  v.entries_[index] = 1.0;
  return v;
}

void ComplexVector::set(std::size_t i, Complex value) {
  if (!finite(value)) throw ContractViolation("ComplexVector::set: non-finite value");
  entries_.at(i) = value;
}

double ComplexVector::norm_squared() const {
  double s = 0.0;
  for (const auto& c : entries_) s += std::norm(c);
  return s;
}

double ComplexVector::norm() const { return std::sqrt(norm_squared()); }

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ContractViolation("normalized: zero vector");
  return Complex(1.0 / n) * *this;
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector +: dimension mismatch");
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return ComplexVector(std::move(out));
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector -: dimension mismatch");
  std::vector<Complex> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return ComplexVector(std::move(out));
}

ComplexVector operator*(Complex c, const ComplexVector& v) {
  std::vector<Complex> out(v.entries().begin(), v.entries().end());
  for (auto& x : out) x *= c;
  return ComplexVector(std::move(out));
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: entry count does not match rows*cols");
  }
  require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

ComplexMatrix ComplexMatrix::column(const ComplexVector& v) {
  return ComplexMatrix(v.dim(), 1, std::vector<Complex>(v.entries().begin(), v.entries().end()));
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) return {};
  const std::size_t rows = columns.front().dim();
  ComplexMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].dim() != rows) throw DimensionError("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m.entries_[i * columns.size() + j] = columns[j][i];
  }
  return m;
}

void ComplexMatrix::set(std::size_t i, std::size_t j, Complex value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("ComplexMatrix::set: index out of range");
  if (!finite(value)) throw ContractViolation("ComplexMatrix::set: non-finite value");
  entries_[i * cols_ + j] = value;
}

ComplexVector ComplexMatrix::column_vector(std::size_t j) const {
  std::vector<Complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return ComplexVector(std::move(out));
}

ComplexVector ComplexMatrix::row_vector(std::size_t i) const {
  return ComplexVector(
      std::vector<Complex>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = (*this)(i, j);
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& c : entries_) s += std::norm(c);
  return std::sqrt(s);
}

Complex ComplexMatrix::trace() const {
  if (!square()) throw DimensionError("trace: matrix not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix *: inner dimension mismatch");
  std::vector<Complex> out(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  return ComplexMatrix(a.rows(), b.cols(), std::move(out));
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.dim()) throw DimensionError("matrix-vector *: dimension mismatch");
  std::vector<Complex> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return ComplexVector(std::move(out));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix +: shape mismatch");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix -: shape mismatch");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

ComplexMatrix operator*(Complex c, const ComplexMatrix& m) {
  std::vector<Complex> out(m.entries().begin(), m.entries().end());
  for (auto& x : out) x *= c;
  return ComplexMatrix(m.rows(), m.cols(), std::move(out));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Gate3Tensor

Gate3Tensor::Gate3Tensor(std::vector<ComplexMatrix> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw DimensionError("Gate3Tensor: needs at least one slice");
  for (const auto& s : slices_) {
    if (s.rows() != slices_.front().rows() || s.cols() != slices_.front().cols() || s.empty())
      throw DimensionError("Gate3Tensor: slices must share a nonempty shape");
  }
}

// Kronecker products

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> out(rows * cols);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out[(i1 * b.rows() + i2) * cols + j1 * b.cols() + j2] = aij * b(i2, j2);
    }
  return ComplexMatrix(rows, cols, std::move(out));
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return ComplexVector(std::move(out));
}

// Decompositions

SvdResult svd(const ComplexMatrix& m) {
  if (m.empty()) throw ContractViolation("svd: empty matrix");
  if (m.rows() >= m.cols()) return svd_tall(m);
  // A = (A^dagger)^dagger = (U S V^dagger)^dagger = V S U^dagger.
  SvdResult t = svd_tall(m.adjoint());
  return {std::move(t.v), std::move(t.s), std::move(t.u)};
}

std::size_t numerical_rank(std::span<const double> singular_values) {
  double s_max = 0.0;
  for (double s : singular_values) s_max = std::max(s_max, s);
  if (s_max <= 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(
      singular_values.begin(), singular_values.end(),
      [&](double s) { return s > kRankTolerance * s_max; }));
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("hermitian_eigen: matrix not square");
  const std::size_t n = a.rows();
  const double scale = a.frobenius_norm();
  if (max_abs_diff(a, a.adjoint()) > 1e-12 * std::max(scale, 1.0))
    throw ContractViolation("hermitian_eigen: matrix not Hermitian");

  std::vector<Complex> m(a.entries().begin(), a.entries().end());
  std::vector<Complex> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(m[i * n + j]);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= kJacobiTolerance * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = m[p * n + q];
        if (std::abs(b) <= 1e-300) continue;
        const Rotation g = jacobi_rotation(m[p * n + p].real(), m[q * n + q].real(), b);
        rotate_columns(m, n, n, p, q, g);
        rotate_rows(m, n, p, q, g);
        // Restore exact Hermitian structure on the rotated pair.
        m[p * n + q] = 0.0;
        m[q * n + p] = 0.0;
        m[p * n + p] = m[p * n + p].real();
        m[q * n + q] = m[q * n + q].real();
        rotate_columns(v, n, n, p, q, g);
      }
    }
  }
  if (sweep == kMaxSweeps) throw NumericalError("hermitian_eigen: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return m[x * n + x].real() < m[y * n + y].real();
  });
  HermitianEigen out;
  out.values.resize(n);
  std::vector<Complex> vs(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = m[order[j] * n + order[j]].real();
    for (std::size_t k = 0; k < n; ++k) vs[k * n + j] = v[k * n + order[j]];
  }
  out.vectors = ComplexMatrix(n, n, std::move(vs));
  return out;
}

UnitaryEigen unitary_eigen(const ComplexMatrix& u) {
  if (!u.square()) throw DimensionError("unitary_eigen: matrix not square");
  const std::size_t n = u.rows();
  const ComplexMatrix ud = u.adjoint();
  const ComplexMatrix herm = Complex(0.5) * (u + ud);
  const ComplexMatrix skew = Complex(0.0, -0.5) * (u - ud);

  // The Hermitian and skew parts of a normal matrix commute, so a generic
  // real combination shares U's eigenvectors. Retry with different weights
  // when a coincidence merges distinct eigenphases.
  constexpr double weights[] = {0.5773502691896258, 0.3183098861837907, 1.7320508075688772,
                                0.1234567890123457, 2.718281828459045};
  double best_off = 0.0;
  for (double w : weights) {
    HermitianEigen e = hermitian_eigen(herm + Complex(w) * skew);
    const ComplexMatrix d = e.vectors.adjoint() * u * e.vectors;
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off = std::max(off, std::abs(d(i, j)));
    best_off = off;
    if (off <= 1e-10) {
      UnitaryEigen out;
      out.values.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.values[i] = d(i, i) / std::abs(d(i, i));
      out.vectors = std::move(e.vectors);
      return out;
    }
  }
  throw NumericalError("unitary_eigen: eigenvectors did not diagonalize input (off-diagonal " +
                       std::to_string(best_off) + ")");
}

ComplexMatrix principal_unitary_sqrt(const ComplexMatrix& u) {
  if (!u.square()) throw DimensionError("principal_unitary_sqrt: matrix not square");
  if (!is_unitary(u, 1e-9)) throw ContractViolation("principal_unitary_sqrt: input not unitary");
  const UnitaryEigen e = unitary_eigen(u);
  std::vector<Complex> roots(e.values.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double theta = std::arg(e.values[i]);
    // Snap the branch cut so that -1 (with either sign of zero) maps to +i.
    if (theta <= -std::numbers::pi + 1e-9) theta = std::numbers::pi;
    roots[i] = std::polar(1.0, theta / 2.0);
  }
  ComplexMatrix v = e.vectors * ComplexMatrix::diagonal(roots) * e.vectors.adjoint();
  if (max_abs_diff(v * v, u) > 1e-9) throw NumericalError("principal_unitary_sqrt: V*V != U");
  return v;
}

// res / unres and 3-tensors

ComplexVector res(const ComplexMatrix& m) {
  return ComplexVector(std::vector<Complex>(m.entries().begin(), m.entries().end()));
}

ComplexMatrix unres(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  if (v.dim() != rows * cols) throw DimensionError("unres: vector dimension != rows*cols");
  return ComplexMatrix(rows, cols, std::vector<Complex>(v.entries().begin(), v.entries().end()));
}

ComplexMatrix tensor_apply(const Gate3Tensor& t, const ComplexMatrix& x) {
  if (t.rows() != x.rows() || t.cols() != x.cols())
    throw DimensionError("tensor_apply: slice shape differs from state shape");
  if (t.slice_count() != x.rows() * x.cols())
    throw DimensionError("tensor_apply: slice count must equal rows*cols of the state");
  std::vector<Complex> y(t.slice_count());
  for (std::size_t k = 0; k < t.slice_count(); ++k) y[k] = (t.slice(k) * x).trace();
  return unres(ComplexVector(std::move(y)), x.rows(), x.cols());
}

Gate3Tensor tensor_from_matrix(const ComplexMatrix& g, std::size_t rows, std::size_t cols) {
  if (!g.square() || g.rows() != rows * cols)
    throw DimensionError("tensor_from_matrix: gate must be (rows*cols) square");
  std::vector<ComplexMatrix> slices;
  slices.reserve(g.rows());
  for (std::size_t k = 0; k < g.rows(); ++k)
    slices.push_back(unres(g.row_vector(k), rows, cols).transpose());
  return Gate3Tensor(std::move(slices));
}

ComplexMatrix tensor_to_matrix(const Gate3Tensor& t) {
  const std::size_t width = t.rows() * t.cols();
  std::vector<Complex> out;
  out.reserve(t.slice_count() * width);
  for (const auto& s : t.slices()) {
    const ComplexVector row = res(s.transpose());
    out.insert(out.end(), row.entries().begin(), row.entries().end());
  }
  return ComplexMatrix(t.slice_count(), width, std::move(out));
}

// Comparisons

std::optional<Complex> equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                         double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("equal_up_to_phase: shape mismatch");
  std::size_t pivot = 0;
  double pivot_mag = -1.0;
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    const double mag = std::abs(b.entries()[i]);
    if (mag > pivot_mag) {
      pivot_mag = mag;
      pivot = i;
    }
  }
  const double b_norm = b.frobenius_norm();
  if (pivot_mag <= 0.0) {
    if (a.frobenius_norm() <= tol * b_norm) return Complex(1.0);
    return std::nullopt;
  }
  const Complex ratio = a.entries()[pivot] / b.entries()[pivot];
  if (std::abs(ratio) == 0.0) return std::nullopt;
  const Complex phase = ratio / std::abs(ratio);
  if ((a - phase * b).frobenius_norm() <= tol * b_norm) return phase;
  return std::nullopt;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.square()) throw DimensionError("is_unitary: matrix not square");
  return (m.adjoint() * m - ComplexMatrix::identity(m.rows())).frobenius_norm() <= tol;
}

}  // namespace zq
