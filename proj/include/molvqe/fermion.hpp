#pragma once

#include <complex>
#include <vector>

#include "molvqe/integrals.hpp"
#include "molvqe/pauli.hpp"

namespace molvqe {

enum class Ladder { Create, Annihilate };

struct LadderFactor {
  int mode = 0;
  Ladder kind = Ladder::Create;
  bool operator==(const LadderFactor&) const = default;
  auto operator<=>(const LadderFactor&) const = default;
};

// Product of ladder operators times a complex coefficient.
// An empty factor list is the identity term.
struct LadderTerm {
  std::vector<LadderFactor> factors;
  Complex coeff = 1.0;
};

struct FermionOperator {
  int n_modes = 0;
  std::vector<LadderTerm> terms;

  FermionOperator() = default;
  explicit FermionOperator(int modes) : n_modes(modes) {}
  static FermionOperator identity(int modes, Complex c = 1.0);

  FermionOperator& add_term(std::vector<LadderFactor> factors, Complex c);
  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator& operator*=(Complex c);
};

FermionOperator multiply(const FermionOperator& a, const FermionOperator& b);
FermionOperator adjoint(const FermionOperator& op);

// Rewrites every term so creations precede annihilations, each group in
// strictly increasing mode order; merges like terms and drops coefficients
// below the threshold. Equal to the input as an operator.
FermionOperator normal_order(const FermionOperator& op, double threshold = kCoeffThreshold);

// E_core * 1 + sum h_pq a+_p a_q + 1/2 sum h_pqrs a+_p a+_q a_r a_s
FermionOperator assemble_hamiltonian(const IntegralTensors& tensors);

}  // namespace molvqe
