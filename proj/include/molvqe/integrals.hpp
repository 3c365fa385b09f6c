#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "molvqe/geometry.hpp"

namespace molvqe {

// Spin-orbital integral tensors in the blocked ordering: alpha spins occupy
// indices 0..M/2-1, beta spins M/2..M-1 (same spatial order inside each block).
//
// two_body(p,q,r,s) is the coefficient of a+_p a+_q a_r a_s in the
// second-quantized Hamiltonian (before the global 1/2): it stores the
// antisymmetrized-ready element <pq|sr>, i.e. chemist (ps|qr) with spin
// deltas delta(sp,ss) delta(sq,sr). With this layout
//   H = E_core + sum h_pq a+_p a_q + 1/2 sum two_body(p,q,r,s) a+_p a+_q a_r a_s
// is the physical Hamiltonian; Coulomb <ij|ij> = two_body(i,j,j,i) and
// exchange <ij|ji> = two_body(i,j,i,j).
struct IntegralTensors {
  int n_spin_orbitals = 0;
  double core_energy = 0.0;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<double> h1;  // M*M
  std::vector<double> h2;  // M^4

  IntegralTensors() = default;
  explicit IntegralTensors(int n_so)
      : n_spin_orbitals(n_so),
        h1(static_cast<size_t>(n_so) * n_so, 0.0),
        h2(static_cast<size_t>(n_so) * n_so * n_so * n_so, 0.0) {}

  double& one_body(int p, int q) { return h1[static_cast<size_t>(p) * n_spin_orbitals + q]; }
  double one_body(int p, int q) const { return h1[static_cast<size_t>(p) * n_spin_orbitals + q]; }
  double& two_body(int p, int q, int r, int s) {
    const size_t m = n_spin_orbitals;
    return h2[((static_cast<size_t>(p) * m + q) * m + r) * m + s];
  }
  double two_body(int p, int q, int r, int s) const {
    const size_t m = n_spin_orbitals;
    return h2[((static_cast<size_t>(p) * m + q) * m + r) * m + s];
  }

  int n_spatial() const { return n_spin_orbitals / 2; }

  // Throws on symmetry violations or spin-forbidden nonzeros.
  void validate(double tol = 1e-9) const;
};

// Spatial-orbital chemist-notation integrals, the FCIDUMP payload.
struct SpatialIntegrals {
  int n_orbitals = 0;
  double core_energy = 0.0;
  int n_electrons = 0;
  int ms2 = 0;
  std::vector<double> h1;   // n*n, symmetric
  std::vector<double> eri;  // n^4, (ij|kl) chemist, 8-fold symmetric

  explicit SpatialIntegrals(int n)
      : n_orbitals(n),
        h1(static_cast<size_t>(n) * n, 0.0),
        eri(static_cast<size_t>(n) * n * n * n, 0.0) {}

  double& one(int i, int j) { return h1[static_cast<size_t>(i) * n_orbitals + j]; }
  double one(int i, int j) const { return h1[static_cast<size_t>(i) * n_orbitals + j]; }
  double& chem(int i, int j, int k, int l) {
    const size_t n = n_orbitals;
    return eri[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
  double chem(int i, int j, int k, int l) const {
    const size_t n = n_orbitals;
    return eri[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  }
};

// Expand spatial chemist integrals to blocked spin-orbital tensors.
IntegralTensors spin_orbital_expand(const SpatialIntegrals& sp);

IntegralTensors parse_fcidump(std::istream& in);
IntegralTensors parse_fcidump_file(const std::string& path);
void write_fcidump(const IntegralTensors& tensors, std::ostream& out);

// Mean-field energy of the reference determinant occupying the lowest
// n_alpha + n_beta spin orbitals (no SCF; orbitals are taken as given).
double reference_energy(const IntegralTensors& tensors);

// --- native s-Gaussian STO-3G engine (hydrogen-only systems) ---

struct BasisShell {
  Vec3 center{};  // Bohr
  std::array<double, 3> exponents{};
  std::array<double, 3> coefficients{};
};

// One shell per line: "element exp1 c1 exp2 c2 exp3 c3".
std::vector<BasisShell> load_basis(const std::string& path, const MolecularGeometry& geometry);
std::string default_basis_path();

IntegralTensors sgto_integrals(const MolecularGeometry& geometry,
                               const std::vector<BasisShell>& basis);

}  // namespace molvqe
