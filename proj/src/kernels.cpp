#include "zq/kernels.hpp"

#include <vector>

namespace zq::kernels {

namespace {

std::size_t ipow(std::size_t d, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) out *= d;
  return out;
}

std::vector<std::size_t> rest_axes(std::size_t subsystems, std::span<const std::size_t> targets) {
  std::vector<bool> is_target(subsystems, false);
  for (auto t : targets) is_target[t] = true;
  std::vector<std::size_t> rest;
  for (std::size_t q = 0; q < subsystems; ++q)
    if (!is_target[q]) rest.push_back(q);
  return rest;
}

// Offsets of the positions spanned by `axes` (first axis most significant).
std::vector<std::size_t> axis_offsets(std::span<const std::size_t> axes, std::size_t local_dim,
                                      std::size_t subsystems) {
  std::vector<std::size_t> stride(subsystems);
  std::size_t s = 1;
  for (std::size_t q = subsystems; q-- > 0;) {
    stride[q] = s;
    s *= local_dim;
  }
  const std::size_t count = ipow(local_dim, axes.size());
  std::vector<std::size_t> offsets(count, 0);
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t code = j;
    std::size_t off = 0;
    for (std::size_t l = axes.size(); l-- > 0;) {
      off += (code % local_dim) * stride[axes[l]];
      code /= local_dim;
    }
    offsets[j] = off;
  }
  return offsets;
}

// out[new] = in[old], where new lists the digits of old in `order`.
void permute_axes(std::span<const Complex> in, std::span<Complex> out, std::size_t local_dim,
                  std::size_t subsystems, std::span<const std::size_t> order) {
  std::vector<std::size_t> digits(subsystems);
  for (std::size_t old_index = 0; old_index < in.size(); ++old_index) {
    std::size_t code = old_index;
    for (std::size_t q = subsystems; q-- > 0;) {
      digits[q] = code % local_dim;
      code /= local_dim;
    }
    std::size_t new_index = 0;
    for (std::size_t p = 0; p < subsystems; ++p) new_index = new_index * local_dim + digits[order[p]];
    out[new_index] = in[old_index];
  }
}

}  // namespace

void apply_gate(std::span<const Complex> in, std::span<Complex> out, const ComplexMatrix& g,
                std::size_t local_dim, std::size_t subsystems, std::span<const std::size_t> targets) {
  const auto rest = rest_axes(subsystems, targets);
  const auto local = axis_offsets(targets, local_dim, subsystems);
  const auto bases = axis_offsets(rest, local_dim, subsystems);
  const std::size_t k = local.size();
  const long long blocks = static_cast<long long>(bases.size());
  const Complex* gm = g.entries().data();

#pragma omp parallel
  {
    std::vector<Complex> buf(k);
#pragma omp for schedule(static)
    for (long long r = 0; r < blocks; ++r) {
      const std::size_t base = bases[static_cast<std::size_t>(r)];
      for (std::size_t j = 0; j < k; ++j) buf[j] = in[base + local[j]];
      for (std::size_t i = 0; i < k; ++i) {
        Complex acc = 0.0;
        const Complex* row = gm + i * k;
        for (std::size_t j = 0; j < k; ++j) acc += row[j] * buf[j];
        out[base + local[i]] = acc;
      }
    }
  }
}

void apply_gate_reference(std::span<const Complex> in, std::span<Complex> out, const ComplexMatrix& g,
                          std::size_t local_dim, std::size_t subsystems,
                          std::span<const std::size_t> targets) {
  std::vector<std::size_t> order(targets.begin(), targets.end());
  const auto rest = rest_axes(subsystems, targets);
  order.insert(order.end(), rest.begin(), rest.end());

  std::vector<Complex> front(in.size());
  permute_axes(in, front, local_dim, subsystems, order);

  // (g (x) I_R) x with R = d^(n-k).
  const std::size_t k = g.rows();
  const std::size_t r = in.size() / k;
  std::vector<Complex> applied(in.size(), 0.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Complex gij = g(i, j);
      for (std::size_t t = 0; t < r; ++t) applied[i * r + t] += gij * front[j * r + t];
    }

  std::vector<std::size_t> inverse(subsystems);
  for (std::size_t p = 0; p < subsystems; ++p) inverse[order[p]] = p;
  permute_axes(applied, out, local_dim, subsystems, inverse);
}

}  // namespace zq::kernels
