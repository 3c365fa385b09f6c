#pragma once

#include <complex>
#include <span>
#include <vector>

#include "molvqe/circuit.hpp"
#include "molvqe/pauli.hpp"

namespace molvqe {

// Serial is the reference path; Parallel runs the OpenMP kernels. Both are
// elementwise identical computations, so results agree bitwise.
enum class Execution { Serial, Parallel };

struct StateVector {
  int n_qubits = 0;
  std::vector<Complex> amps;

  static StateVector zero_state(int n_qubits);
  static StateVector basis_state(int n_qubits, uint64_t index);
  double norm() const;
};

void apply_gate(StateVector& state, const Gate& gate, std::span<const double> theta = {},
                Execution exec = Execution::Parallel);

StateVector run_circuit(const Circuit& circuit, const StateVector& initial,
                        std::span<const double> theta = {},
                        Execution exec = Execution::Parallel);

// Exact <state|h|state>; asserts the imaginary residual is below 1e-10.
double expectation(const StateVector& state, const PauliSum& h,
                   Execution exec = Execution::Parallel);

// y = h * x, matrix-free; terms grouped by flip mask, per-group loops are
// conflict-free and deterministic. Reused by the Lanczos solver.
struct PauliSumApplier {
  int n_qubits = 0;
  struct Group {
    uint64_t x_mask = 0;
    std::vector<uint64_t> z_masks;
    std::vector<Complex> coeffs;  // coefficient * i^(#Y), premultiplied
  };
  std::vector<Group> groups;

  explicit PauliSumApplier(const PauliSum& s);
  void apply(std::span<const Complex> x, std::span<Complex> y, Execution exec) const;
  double expectation(std::span<const Complex> x, Execution exec) const;
};

}  // namespace molvqe
