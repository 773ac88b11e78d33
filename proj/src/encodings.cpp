#include "zq/encodings.hpp"

#include <cmath>
#include <map>

namespace zq {

BitString::BitString(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw ContractViolation("bit string must contain only 0 and 1");
  }
}

BitString BitString::from_value(std::uint64_t value, std::size_t width) {
  if (width > 64) throw ContractViolation("bit string wider than 64 bits");
  std::string s(width, '0');
  for (std::size_t k = 0; k < width; ++k)
    if ((value >> (width - 1 - k)) & 1u) s[k] = '1';
  return BitString(s);
}

std::uint64_t BitString::value() const noexcept {
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | (c == '1' ? 1u : 0u);
  return v;
}

std::vector<ComplexVector> Encoding::ambient_basis() const {
  std::vector<ComplexVector> out(basis0);
  out.insert(out.end(), basis1.begin(), basis1.end());
  out.insert(out.end(), fixed_complement.begin(), fixed_complement.end());
  return out;
}

void validate_encoding(const Encoding& enc, double tol) {
  const auto fail = [&](const std::string& what) {
    throw ContractViolation("encoding '" + enc.name + "': " + what);
  };
  if (enc.ambient_dim == 0) fail("ambient dimension must be positive");
  if (enc.basis0.empty() || enc.basis1.empty()) fail("both logical subspaces must be nonempty");
  if (enc.basis0.size() != enc.basis1.size())
    fail("logical subspaces have unequal dimensions " + std::to_string(enc.basis0.size()) + " and " +
         std::to_string(enc.basis1.size()));
  const auto all = enc.ambient_basis();
  if (all.size() != enc.ambient_dim)
    fail("subspace dimensions sum to " + std::to_string(all.size()) + ", ambient dimension is " +
         std::to_string(enc.ambient_dim));
  for (const auto& v : all)
    if (v.dim() != enc.ambient_dim) fail("basis vector has wrong dimension");
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      const Complex g = inner(all[i], all[j]);
      const Complex expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol)
        fail("basis vectors " + std::to_string(i) + " and " + std::to_string(j) + " not orthonormal");
    }
}

EncodingRef make_encoding(Encoding enc) {
  validate_encoding(enc);
  return std::make_shared<const Encoding>(std::move(enc));
}

namespace {

Encoding make_builtin(std::string_view name) {
  using V = ComplexVector;
  const auto e = [](std::size_t d, std::size_t k) { return V::basis(d, k); };
  if (name == "qubit") return {"qubit", 2, {e(2, 0)}, {e(2, 1)}, {}};
  if (name == "qutrit") return {"qutrit", 3, {e(3, 0)}, {e(3, 2)}, {e(3, 1)}};
  if (name == "ququart") return {"ququart", 4, {e(4, 0), e(4, 3)}, {e(4, 1), e(4, 2)}, {}};
  if (name == "matrix2") {
    const ComplexMatrix e11{{1, 0}, {0, 0}}, e22{{0, 0}, {0, 1}};
    const ComplexMatrix e12{{0, 1}, {0, 0}}, e21{{0, 0}, {1, 0}};
    return {"matrix2", 4, {res(e11), res(e22)}, {res(e12), res(e21)}, {}};
  }
  if (name == "pauli") {
    const Complex i(0.0, 1.0);
    const Complex h(1.0 / std::sqrt(2.0));
    const ComplexMatrix id{{1, 0}, {0, 1}}, x{{0, 1}, {1, 0}};
    const ComplexMatrix y{{0, -i}, {i, 0}}, z{{1, 0}, {0, -1}};
    return {"pauli", 4, {h * res(id), h * res(x)}, {h * res(y), h * res(z)}, {}};
  }
  throw ContractViolation("unknown encoding '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& builtin_encoding_names() {
  static const std::vector<std::string> names{"qubit", "qutrit", "ququart", "matrix2", "pauli"};
  return names;
}

EncodingRef builtin_encoding(std::string_view name) {
  static const std::map<std::string, EncodingRef, std::less<>> cache = [] {
    std::map<std::string, EncodingRef, std::less<>> m;
    for (const auto& n : builtin_encoding_names()) m.emplace(n, make_encoding(make_builtin(n)));
    return m;
  }();
  const auto it = cache.find(name);
  if (it == cache.end()) throw ContractViolation("unknown encoding '" + std::string(name) + "'");
  return it->second;
}

std::size_t power_dim(std::size_t d, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (out > (std::size_t{1} << 62) / d) throw DimensionError("state dimension overflow");
    out *= d;
  }
  return out;
}

QuantumState::QuantumState(ComplexVector amplitudes, EncodingRef encoding, std::size_t subsystem_count)
    : amplitudes_(std::move(amplitudes)), encoding_(std::move(encoding)), subsystems_(subsystem_count) {
  if (!encoding_) throw ContractViolation("QuantumState: null encoding");
  if (subsystems_ == 0) throw ContractViolation("QuantumState: needs at least one subsystem");
  if (amplitudes_.dim() != power_dim(encoding_->ambient_dim, subsystems_))
    throw DimensionError("QuantumState: amplitude count != d^n");
  if (amplitudes_.norm_squared() == 0.0) throw ContractViolation("QuantumState: zero state");
}

QuantumState QuantumState::normalized() const {
  return QuantumState(amplitudes_.normalized(), encoding_, subsystems_);
}

QuantumState QuantumState::with_amplitudes(ComplexVector amplitudes) const {
  return QuantumState(std::move(amplitudes), encoding_, subsystems_);
}

QuantumState encode_bits(const EncodingRef& enc, const BitString& bits) {
  if (!enc) throw ContractViolation("encode_bits: null encoding");
  if (bits.empty()) throw ContractViolation("encode_bits: need at least one bit");
  ComplexVector v = enc->basis(bits[0]).front();
  for (std::size_t k = 1; k < bits.size(); ++k) v = kron(v, enc->basis(bits[k]).front());
  return QuantumState(std::move(v), enc, bits.size());
}

namespace {

// Kronecker products of one vector from each factor list, lexicographic in
// the factor indices (first list most significant).
std::vector<ComplexVector> product_basis(const std::vector<const std::vector<ComplexVector>*>& factors) {
  std::vector<ComplexVector> out{ComplexVector{Complex(1.0)}};
  for (const auto* f : factors) {
    std::vector<ComplexVector> next;
    next.reserve(out.size() * f->size());
    for (const auto& head : out)
      for (const auto& v : *f) next.push_back(kron(head, v));
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<ComplexVector> logical_subspace(const Encoding& enc, const BitString& bits) {
  if (bits.empty()) throw ContractViolation("logical_subspace: need at least one bit");
  std::vector<const std::vector<ComplexVector>*> factors;
  for (std::size_t k = 0; k < bits.size(); ++k) factors.push_back(&enc.basis(bits[k]));
  return product_basis(factors);
}

std::vector<ComplexVector> complement_subspace(const Encoding& enc, std::size_t n) {
  if (enc.fixed_complement.empty()) return {};
  // Enumerate factor choices: 0 = basis0, 1 = basis1, 2 = fixed; keep tuples
  // containing at least one fixed factor, in tuple order.
  std::vector<ComplexVector> out;
  std::size_t tuples = power_dim(3, n);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<const std::vector<ComplexVector>*> factors(n);
    bool any_fixed = false;
    std::size_t code = t;
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t c = code % 3;
      code /= 3;
      factors[k] = c == 0 ? &enc.basis0 : c == 1 ? &enc.basis1 : &enc.fixed_complement;
      any_fixed = any_fixed || c == 2;
    }
    if (!any_fixed) continue;
    auto part = product_basis(factors);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::string to_string(const StateClass& c) {
  switch (c.kind) {
    case StateClass::Kind::Logical:
      return "Logical(" + c.bits.str() + ")";
    case StateClass::Kind::Superposition:
      return "Superposition";
    case StateClass::Kind::OutsideCode:
      return "OutsideCode";
  }
  return "?";
}

double projected_weight(std::span<const ComplexVector> basis, const ComplexVector& v) {
  double w = 0.0;
  for (const auto& b : basis) w += std::norm(inner(b, v));
  return w;
}

StateClass classify_state(const Encoding& enc, const QuantumState& s, double tol) {
  if (!(s.encoding() == enc)) throw ContractViolation("classify_state: state uses a different encoding");
  const std::size_t n = s.subsystem_count();
  if (n > 16) throw DimensionError("classify_state: too many subsystems");
  const double total = s.amplitudes().norm_squared();
  double logical_total = 0.0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const BitString bits = BitString::from_value(b, n);
    const double w = projected_weight(logical_subspace(enc, bits), s.amplitudes());
    if (w >= (1.0 - tol) * total) return {StateClass::Kind::Logical, bits};
    logical_total += w;
  }
  if (logical_total < (1.0 - tol) * total) return {StateClass::Kind::OutsideCode, {}};
  return {StateClass::Kind::Superposition, {}};
}

}  // namespace zq
