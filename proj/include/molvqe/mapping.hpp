#pragma once

#include <vector>

#include "molvqe/fermion.hpp"
#include "molvqe/pauli.hpp"

namespace molvqe {

enum class MappingKind { JordanWigner, Parity };

// q_p = (sum_{i<=p} f_i) mod 2; a bijection on bit vectors.
std::vector<int> parity_encode(const std::vector<int>& f);
std::vector<int> parity_decode(const std::vector<int>& q);

// Pauli image of a single ladder operator (qubit count = mode count).
PauliSum map_ladder(int n_modes, int mode, Ladder kind, MappingKind mapping);

PauliSum map_operator(const FermionOperator& op, MappingKind mapping);

// Removes the spin-up-parity qubit M/2-1 and the total-parity qubit M-1 of a
// parity-mapped sum under the blocked spin ordering, substituting their Z
// eigenvalues (-1)^n_alpha and (-1)^(n_alpha+n_beta). Throws if any term has
// an X or Y component on either qubit.
PauliSum two_qubit_reduce(const PauliSum& s, int n_alpha, int n_beta);

// Computational-basis image of an occupation vector (blocked ordering),
// with the two symmetry qubits dropped when reduced.
uint64_t encode_occupation(const std::vector<int>& occupation, MappingKind mapping,
                           bool reduced = false);

// Reference (HF) occupation vector: lowest n_alpha alpha and n_beta beta modes.
std::vector<int> reference_occupation(int n_modes, int n_alpha, int n_beta);

}  // namespace molvqe
