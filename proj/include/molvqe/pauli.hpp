#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace molvqe {

using Complex = std::complex<double>;

inline constexpr double kCoeffThreshold = 1e-12;

// Pauli string over n qubits, letters packed as x/z bit pairs:
// I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). Qubit 0 is the least significant
// amplitude-index bit everywhere. Phases live in coefficients, not here.
struct PauliString {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;

  static PauliString identity(int n_qubits) { return {n_qubits, 0, 0}; }
  static PauliString single(int n_qubits, int qubit, char letter);

  char letter(int q) const {
    const bool bx = (x >> q) & 1, bz = (z >> q) & 1;
    return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }
  bool is_identity() const { return x == 0 && z == 0; }
  int weight() const;

  bool operator==(const PauliString& o) const { return n == o.n && x == o.x && z == o.z; }
  // lexicographic on letters from qubit 0, I < X < Y < Z
  bool operator<(const PauliString& o) const;

  std::string str() const;  // e.g. "Z0 X2", identity renders as "I"
};

// a*b = i^phase_exp * string  (phase_exp mod 4, exact)
struct PauliProduct {
  int phase_exp = 0;
  PauliString string;
};
PauliProduct string_multiply(const PauliString& a, const PauliString& b);

struct PauliSum {
  int n_qubits = 0;
  std::map<PauliString, Complex> terms;

  PauliSum() = default;
  explicit PauliSum(int n) : n_qubits(n) {}
  static PauliSum identity(int n, Complex c = 1.0);

  PauliSum& add(const PauliString& s, Complex c);
  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator*=(Complex c);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  size_t size() const { return terms.size(); }
  bool is_hermitian(double tol = 1e-10) const;

  std::string str() const;                    // one term per line, "(re,im) Z0 X2"
  static PauliSum parse(const std::string& text, int n_qubits);
};

// Drops |coeff| < threshold terms; map order is already canonical.
PauliSum simplify(const PauliSum& s, double threshold = kCoeffThreshold);

// Kronecker realization, qubit 0 = least significant bit. Guarded to n <= 16.
Eigen::SparseMatrix<Complex> to_matrix(const PauliSum& s);
Eigen::MatrixXcd to_dense_matrix(const PauliSum& s);  // n <= 12

}  // namespace molvqe
