#include "molvqe/mapping.hpp"

#include <stdexcept>

namespace molvqe {

std::vector<int> parity_encode(const std::vector<int>& f) {
  std::vector<int> q(f.size());
  int acc = 0;
  for (size_t p = 0; p < f.size(); ++p) {
    acc = (acc + f[p]) & 1;
    q[p] = acc;
  }
  return q;
}

std::vector<int> parity_decode(const std::vector<int>& q) {
  std::vector<int> f(q.size());
  int prev = 0;
  for (size_t p = 0; p < q.size(); ++p) {
    f[p] = q[p] ^ prev;
    prev = q[p];
  }
  return f;
}

PauliSum map_ladder(int n_modes, int mode, Ladder kind, MappingKind mapping) {
  if (mode < 0 || mode >= n_modes) throw std::out_of_range("map_ladder: mode index");
  const double half = 0.5;
  // sign of the iY/2 component: + for annihilation, - for creation
  const Complex iy = (kind == Ladder::Annihilate) ? Complex{0, half} : Complex{0, -half};
  PauliSum out(n_modes);
  if (mapping == MappingKind::JordanWigner) {
    // Z chain below the mode, 1/2 (X -+ iY) at the mode
    PauliString sx = PauliString::identity(n_modes);
    for (int j = 0; j < mode; ++j) sx.z |= 1ull << j;
    PauliString sy = sx;
    sx.x |= 1ull << mode;
    sy.x |= 1ull << mode;
    sy.z |= 1ull << mode;
    out.add(sx, half);
    out.add(sy, iy);
  } else {
    // X chain above the mode; 1/2 (X_p Z_{p-1} +- i Y_p), the Z absent at p=0
    PauliString sx = PauliString::identity(n_modes);
    for (int j = mode + 1; j < n_modes; ++j) sx.x |= 1ull << j;
    PauliString sy = sx;
    sx.x |= 1ull << mode;
    if (mode > 0) sx.z |= 1ull << (mode - 1);
    sy.x |= 1ull << mode;
    sy.z |= 1ull << mode;
    out.add(sx, half);
    out.add(sy, iy);
  }
  return out;
}

PauliSum map_operator(const FermionOperator& op, MappingKind mapping) {
  const int n = op.n_modes;
  PauliSum out(n);
  for (const auto& term : op.terms) {
    PauliSum acc = PauliSum::identity(n, term.coeff);
    for (const auto& f : term.factors) acc = acc * map_ladder(n, f.mode, f.kind, mapping);
    out += acc;
  }
  return simplify(out);
}

PauliSum two_qubit_reduce(const PauliSum& s, int n_alpha, int n_beta) {
  const int m = s.n_qubits;
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("two_qubit_reduce: even qubit count required");
  const int spin_qubit = m / 2 - 1;
  const int total_qubit = m - 1;
  const double spin_eig = (n_alpha % 2 == 0) ? 1.0 : -1.0;
  const double total_eig = ((n_alpha + n_beta) % 2 == 0) ? 1.0 : -1.0;

  PauliSum out(m - 2);
  for (const auto& [str, c] : s.terms) {
    for (int q : {spin_qubit, total_qubit})
      if ((str.x >> q) & 1)
        throw std::invalid_argument(
            "two_qubit_reduce: term anticommutes with a symmetry operator");
    double eig = 1.0;
    if ((str.z >> spin_qubit) & 1) eig *= spin_eig;
    if ((str.z >> total_qubit) & 1) eig *= total_eig;
    PauliString red = PauliString::identity(m - 2);
    int out_q = 0;
    for (int q = 0; q < m; ++q) {
      if (q == spin_qubit || q == total_qubit) continue;
      if ((str.x >> q) & 1) red.x |= 1ull << out_q;
      if ((str.z >> q) & 1) red.z |= 1ull << out_q;
      ++out_q;
    }
    out.add(red, c * eig);
  }
  return simplify(out);
}

std::vector<int> reference_occupation(int n_modes, int n_alpha, int n_beta) {
  const int half = n_modes / 2;
  if (n_alpha > half || n_beta > half)
    throw std::invalid_argument("reference_occupation: occupation exceeds orbital count");
  std::vector<int> f(n_modes, 0);
  for (int p = 0; p < n_alpha; ++p) f[p] = 1;
  for (int p = 0; p < n_beta; ++p) f[half + p] = 1;
  return f;
}

uint64_t encode_occupation(const std::vector<int>& occupation, MappingKind mapping,
                           bool reduced) {
  const int m = static_cast<int>(occupation.size());
  std::vector<int> bits =
      (mapping == MappingKind::Parity) ? parity_encode(occupation) : occupation;
  if (reduced) {
    if (mapping != MappingKind::Parity)
      throw std::invalid_argument("encode_occupation: reduction requires the parity mapping");
    std::vector<int> kept;
    for (int q = 0; q < m; ++q)
      if (q != m / 2 - 1 && q != m - 1) kept.push_back(bits[q]);
    bits = kept;
  }
  uint64_t index = 0;
  for (size_t q = 0; q < bits.size(); ++q)
    if (bits[q]) index |= 1ull << q;
  return index;
}

}  // namespace molvqe
