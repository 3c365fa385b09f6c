#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "molvqe/fermion.hpp"
#include "molvqe/mapping.hpp"
#include "molvqe/pauli.hpp"

namespace molvqe::testutil {

// Random Hermitian particle-number-conserving fermionic operator:
// one- and two-body terms plus their adjoints, real coefficients.
inline FermionOperator random_conserving_operator(int n_modes, std::mt19937_64& rng,
                                                  int n_one = 4, int n_two = 4) {
  std::uniform_int_distribution<int> mode(0, n_modes - 1);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  FermionOperator op(n_modes);
  for (int k = 0; k < n_one; ++k) {
    const int p = mode(rng), q = mode(rng);
    const double c = coeff(rng);
    op.add_term({{p, Ladder::Create}, {q, Ladder::Annihilate}}, c);
    op.add_term({{q, Ladder::Create}, {p, Ladder::Annihilate}}, c);
  }
  for (int k = 0; k < n_two; ++k) {
    const int p = mode(rng), q = mode(rng), r = mode(rng), s = mode(rng);
    const double c = coeff(rng);
    op.add_term({{p, Ladder::Create},
                 {q, Ladder::Create},
                 {r, Ladder::Annihilate},
                 {s, Ladder::Annihilate}},
                c);
    op.add_term({{s, Ladder::Create},
                 {r, Ladder::Create},
                 {q, Ladder::Annihilate},
                 {p, Ladder::Annihilate}},
                c);
  }
  return op;
}

inline Eigen::VectorXd sorted_spectrum(const PauliSum& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense_matrix(s));
  return es.eigenvalues();
}

inline double matrix_distance(const PauliSum& a, const PauliSum& b) {
  return (to_dense_matrix(a) - to_dense_matrix(b)).cwiseAbs().maxCoeff();
}

}  // namespace molvqe::testutil
