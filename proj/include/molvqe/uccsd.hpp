#pragma once

#include <vector>

#include "molvqe/circuit.hpp"
#include "molvqe/fermion.hpp"
#include "molvqe/mapping.hpp"
#include "molvqe/pauli.hpp"

namespace molvqe {

struct Excitation {
  enum class Kind { Single, Double };
  Kind kind = Kind::Single;
  // Single: occupied[0] -> virtuals[0]. Double: occupied {i,j} -> virtuals {k,k'}.
  std::array<int, 2> occupied{-1, -1};
  std::array<int, 2> virtuals{-1, -1};
  int slot = -1;
};

struct TrotterConfig {
  int order = 1;  // 1 or 2
  int steps = 1;
};

// All spin-conserving singles and doubles out of the blocked HF reference,
// lexicographic, slots assigned in list order.
std::vector<Excitation> enumerate_excitations(int n_spin_orbitals, int n_alpha, int n_beta);

// Merge the slots of spin-mirror partners (alpha<->beta of the same spatial
// transition). Returns the number of distinct slots.
int tie_spin_parameters(std::vector<Excitation>& excitations, int n_spin_orbitals);
int slot_count(const std::vector<Excitation>& excitations);

// T(theta) - T+(theta), anti-Hermitian by construction.
FermionOperator build_generator(const std::vector<Excitation>& excitations,
                                const std::vector<double>& theta, int n_spin_orbitals);

// Product of term exponentials exp(c_s P_s) for an anti-Hermitian sum
// (purely imaginary coefficients), canonical term order, fixed angles.
Circuit trotter_circuit(const PauliSum& generator, const TrotterConfig& config);

// X gates preparing the mapped image of the HF occupation vector.
Circuit reference_state_circuit(int n_spin_orbitals, int n_alpha, int n_beta,
                                MappingKind mapping, bool reduced = false);

// Parameterized Trotterized UCCSD ansatz: per-excitation Pauli images cached,
// RZ angles tied to theta slots.
struct UccsdAnsatz {
  int n_qubits = 0;
  int n_params = 0;
  std::vector<Excitation> excitations;
  std::vector<PauliSum> images;  // mapped (T_e - T_e+) at unit amplitude

  Circuit circuit(const TrotterConfig& config) const;
};

UccsdAnsatz build_uccsd_ansatz(int n_spin_orbitals, int n_alpha, int n_beta,
                               MappingKind mapping, bool reduce_two_qubits,
                               bool tie_parameters = true);

}  // namespace molvqe
