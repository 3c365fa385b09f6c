#pragma once

#include "molvqe/mapping.hpp"
#include "molvqe/pauli.hpp"
#include "molvqe/simulator.hpp"

namespace molvqe {

// Full Hermitian diagonalization, n <= 12.
double ground_energy_dense(const PauliSum& h);

struct LanczosOptions {
  int max_iterations = 400;
  double tol = 1e-12;   // Ritz-value change
  uint64_t seed = 0x5eed;
  Execution exec = Execution::Parallel;
};

struct LanczosResult {
  double energy = 0.0;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Lanczos with full reorthogonalization, matrix-free term application, n <= 16.
LanczosResult ground_energy_iterative(const PauliSum& h, const LanczosOptions& opts = {});

// Minimum eigenvalue restricted to the (n_alpha, n_beta) particle sector.
// `reduced` marks a parity-mapped sum after two_qubit_reduce.
double sector_ground_energy(const PauliSum& h, int n_alpha, int n_beta,
                            MappingKind mapping, bool reduced = false);

}  // namespace molvqe
