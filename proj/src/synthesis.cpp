#include "zq/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace zq {

namespace {

constexpr std::size_t kMaxArity = 20;

std::uint64_t mask(std::size_t bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

bool is_bijection(std::span<const std::uint64_t> table) {
  std::vector<bool> seen(table.size(), false);
  for (auto y : table) {
    if (y >= table.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

std::string ket(const BitString& b) { return "|" + b.str() + ">"; }

// Residual of v after projecting onto span(basis).
double residual(std::span<const ComplexVector> basis, const ComplexVector& v) {
  ComplexVector r = v;
  for (const auto& b : basis) r = r - inner(b, v) * b;
  return r.norm();
}

}  // namespace

ClassicalFunction::ClassicalFunction(std::size_t arity_in, std::size_t arity_out,
                                     std::vector<std::uint64_t> table)
    : arity_in_(arity_in), arity_out_(arity_out), table_(std::move(table)) {
  if (arity_in_ == 0 || arity_out_ == 0) throw ContractViolation("ClassicalFunction: arities must be positive");
  if (arity_in_ > kMaxArity || arity_out_ > kMaxArity)
    throw ContractViolation("ClassicalFunction: arity above " + std::to_string(kMaxArity));
  if (table_.size() != (std::size_t{1} << arity_in_))
    throw ContractViolation("ClassicalFunction: table must list all 2^m inputs");
  for (auto y : table_)
    if (y > mask(arity_out_)) throw ContractViolation("ClassicalFunction: output wider than arity_out");
  reversible_ = arity_in_ == arity_out_ && is_bijection(table_);
}

ClassicalFunction ClassicalFunction::identity(std::size_t bits) {
  std::vector<std::uint64_t> t(std::size_t{1} << bits);
  std::iota(t.begin(), t.end(), 0);
  return ClassicalFunction(bits, bits, std::move(t));
}

ClassicalFunction ClassicalFunction::constant(std::size_t arity_in, std::size_t arity_out,
                                              std::uint64_t value) {
  return ClassicalFunction(arity_in, arity_out, std::vector<std::uint64_t>(std::size_t{1} << arity_in, value));
}

ClassicalFunction ClassicalFunction::negation() { return ClassicalFunction(1, 1, {1, 0}); }

ClassicalFunction ClassicalFunction::conditional_not() { return ClassicalFunction(2, 2, {0b00, 0b01, 0b11, 0b10}); }

ClassicalFunction ClassicalFunction::swap() { return ClassicalFunction(2, 2, {0b00, 0b10, 0b01, 0b11}); }

BitString ClassicalFunction::operator()(const BitString& x) const {
  if (x.size() != arity_in_) throw DimensionError("ClassicalFunction: input width mismatch");
  return BitString::from_value(table_.at(x.value()), arity_out_);
}

ClassicalFunction compose(const ClassicalFunction& f, const ClassicalFunction& g) {
  if (g.arity_out() != f.arity_in()) throw DimensionError("compose: arities do not chain");
  std::vector<std::uint64_t> t(g.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f(g(x));
  return ClassicalFunction(g.arity_in(), f.arity_out(), std::move(t));
}

ClassicalFunction reversible_closure(const ClassicalFunction& f) {
  const std::size_t m = f.arity_in();
  const std::size_t n = f.arity_out();
  std::vector<std::uint64_t> t(std::size_t{1} << (m + n));
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) t[(x << n) | y] = (x << n) | (f(x) ^ y);
  return ClassicalFunction(m + n, m + n, std::move(t));
}

SynthesizedGate quantize_reversible(const ClassicalFunction& f, const EncodingRef& enc) {
  if (!enc) throw ContractViolation("quantize_reversible: null encoding");
  if (!f.reversible())
    throw ContractViolation("quantize_reversible: function is not a bijection; use quantize_irreversible");
  const std::size_t n = f.arity_in();
  const std::size_t dim = power_dim(enc->ambient_dim, n);
  if (dim > kMaxSynthesisDim) throw DimensionError("quantize_reversible: gate dimension above limit");

  std::vector<Complex> u(dim * dim, 0.0);
  const auto add_outer = [&](const ComplexVector& out, const ComplexVector& in) {
    for (std::size_t r = 0; r < dim; ++r) {
      if (out[r] == Complex(0.0)) continue;
      for (std::size_t c = 0; c < dim; ++c) u[r * dim + c] += out[r] * std::conj(in[c]);
    }
  };
  for (std::uint64_t x = 0; x < f.table().size(); ++x) {
    const auto in = logical_subspace(*enc, BitString::from_value(x, n));
    const auto out = logical_subspace(*enc, BitString::from_value(f(x), n));
    for (std::size_t i = 0; i < in.size(); ++i) add_outer(out[i], in[i]);
  }
  for (const auto& c : complement_subspace(*enc, n)) add_outer(c, c);

  // Entries built from 0/1 bases are exact; clean rounding from complex ones.
  for (auto& z : u) {
    if (std::abs(z.real()) < 1e-15) z.real(0.0);
    if (std::abs(z.imag()) < 1e-15) z.imag(0.0);
  }
  return {ComplexMatrix(dim, dim, std::move(u)), enc, f, SynthesisRule::Reversible, n};
}

SynthesizedGate quantize_irreversible(const ClassicalFunction& f, const EncodingRef& enc) {
  SynthesizedGate g = quantize_reversible(reversible_closure(f), enc);
  g.source = f;
  g.rule = SynthesisRule::Irreversible;
  return g;
}

ComplexMatrix controlled(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("controlled: expected a 2x2 gate");
  if (!is_unitary(u, 1e-10)) throw ContractViolation("controlled: gate is not unitary");
  ComplexMatrix c = ComplexMatrix::identity(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c.set(2 + i, 2 + j, u(i, j));
  return c;
}

ComplexMatrix sqrt_gate(const SynthesizedGate& g) { return principal_unitary_sqrt(g.matrix); }

QuantizationReport check_quantization(const ComplexMatrix& u, const ClassicalFunction& f,
                                      const Encoding& enc, double tol) {
  const ClassicalFunction map = f.reversible() ? f : reversible_closure(f);
  const std::size_t n = map.arity_in();
  const std::size_t dim = power_dim(enc.ambient_dim, n);
  if (!u.square() || u.rows() != dim)
    throw DimensionError("check_quantization: matrix is " + std::to_string(u.rows()) + "x" +
                         std::to_string(u.cols()) + ", expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " for " + std::to_string(n) + " " + enc.name +
                         " subsystem(s)");

  QuantizationReport report;
  report.unitary = is_unitary(u, tol);
  if (!report.unitary) {
    std::ostringstream os;
    os << "matrix is not unitary (|U^dagger U - I|_F = "
       << (u.adjoint() * u - ComplexMatrix::identity(dim)).frobenius_norm() << ")";
    report.violations.push_back(os.str());
  }

  std::vector<std::vector<ComplexVector>> subspaces(map.table().size());
  for (std::uint64_t x = 0; x < subspaces.size(); ++x)
    subspaces[x] = logical_subspace(enc, BitString::from_value(x, n));

  for (std::uint64_t x = 0; x < subspaces.size(); ++x) {
    const BitString in = BitString::from_value(x, n);
    const BitString out = BitString::from_value(map(x), n);
    const auto& target = subspaces[map(x)];
    for (std::size_t i = 0; i < subspaces[x].size(); ++i) {
      const ComplexVector image = u * subspaces[x][i];
      const double r = residual(target, image);
      if (r <= tol) continue;
      // Name where the image actually went.
      std::uint64_t best = 0;
      double best_w = -1.0;
      for (std::uint64_t y = 0; y < subspaces.size(); ++y) {
        const double w = projected_weight(subspaces[y], image);
        if (w > best_w) {
          best_w = w;
          best = y;
        }
      }
      std::ostringstream os;
      os << "input " << in.str() << ": basis vector " << i << " of logical subspace " << ket(in)
         << " leaves target subspace " << ket(out) << " (residual " << r << "); image lies mostly in "
         << ket(BitString::from_value(best, n));
      if (best == x) os << ", the input's own subspace";
      report.violations.push_back(os.str());
    }
  }

  const auto complement = complement_subspace(enc, n);
  for (std::size_t i = 0; i < complement.size(); ++i) {
    const double r = residual(complement, u * complement[i]);
    if (r > tol) {
      std::ostringstream os;
      os << "fixed-complement direction " << i << " is not mapped into the fixed complement (residual " << r
         << ")";
      report.violations.push_back(os.str());
    }
  }
  return report;
}

bool is_quantization_of(const ComplexMatrix& u, const ClassicalFunction& f, const Encoding& enc,
                        double tol) {
  return check_quantization(u, f, enc, tol).ok();
}

ComplexMatrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t d = perm.size();
  std::vector<bool> hit(d, false);
  ComplexMatrix p(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (perm[j] >= d || hit[perm[j]]) throw ContractViolation("permutation_matrix: not a permutation of 0..n-1");
    hit[perm[j]] = true;
    p.set(perm[j], j, 1.0);
  }
  return p;
}

namespace {

std::size_t enumeration_dim(const ClassicalFunction& f, const EncodingRef& enc) {
  if (!enc) throw ContractViolation("enumerate: null encoding");
  if (!f.reversible()) throw ContractViolation("enumerate: function must be reversible");
  const std::size_t dim = power_dim(enc->ambient_dim, f.arity_in());
  if (dim > kMaxEnumerationDim)
    throw ContractViolation("enumerate: ambient dimension " + std::to_string(dim) +
                            " exceeds brute-force limit " + std::to_string(kMaxEnumerationDim));
  return dim;
}

// k-th permutation of 0..d-1 in lexicographic order (factorial number system).
std::vector<std::size_t> unrank_permutation(std::size_t k, std::size_t d) {
  std::vector<std::size_t> pool(d);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> fact(d + 1, 1);
  for (std::size_t i = 1; i <= d; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::size_t> perm;
  perm.reserve(d);
  for (std::size_t i = d; i > 0; --i) {
    const std::size_t idx = k / fact[i - 1];
    k %= fact[i - 1];
    perm.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return perm;
}

}  // namespace

std::vector<ComplexMatrix> enumerate_permutation_quantizations(const ClassicalFunction& f,
                                                               const EncodingRef& enc) {
  const std::size_t dim = enumeration_dim(f, enc);
  std::size_t total = 1;
  for (std::size_t i = 2; i <= dim; ++i) total *= i;

  std::vector<char> accepted(total, 0);
  const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long k = 0; k < count; ++k) {
    const auto perm = unrank_permutation(static_cast<std::size_t>(k), dim);
    accepted[static_cast<std::size_t>(k)] =
        is_quantization_of(permutation_matrix(perm), f, *enc, kEnumerationTolerance) ? 1 : 0;
  }

  std::vector<ComplexMatrix> out;
  for (std::size_t k = 0; k < total; ++k)
    if (accepted[k]) out.push_back(permutation_matrix(unrank_permutation(k, dim)));
  return out;
}

std::vector<ComplexMatrix> enumerate_permutation_quantizations_serial(const ClassicalFunction& f,
                                                                      const EncodingRef& enc) {
  const std::size_t dim = enumeration_dim(f, enc);
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ComplexMatrix> out;
  do {
    ComplexMatrix p = permutation_matrix(perm);
    if (is_quantization_of(p, f, *enc, kEnumerationTolerance)) out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace zq
