#pragma once

#include <functional>
#include <string>
#include <vector>

#include "molvqe/circuit.hpp"
#include "molvqe/pauli.hpp"
#include "molvqe/simulator.hpp"

namespace molvqe {

struct OptimizerConfig {
  double gradient_step = 1e-6;
  double tol_energy = 1e-9;
  double tol_gradient = 1e-7;
  int max_evaluations = 10000;
  std::vector<double> initial_theta;  // empty = all zeros
  int lbfgs_memory = 8;
  Execution exec = Execution::Parallel;
};

struct VqeResult {
  std::vector<double> theta;
  double energy = 0.0;
  int n_evaluations = 0;
  std::vector<std::pair<int, double>> trace;  // (evaluation index, accepted energy)
  bool converged = false;
  std::string reason;
};

using Objective = std::function<double(const std::vector<double>&)>;

double energy_at(const std::vector<double>& theta, const PauliSum& h, const Circuit& ansatz,
                 const Circuit& reference, Execution exec = Execution::Parallel);

std::vector<double> numerical_gradient(const std::vector<double>& theta, const Objective& f,
                                       double step);

// L-BFGS with backtracking Armijo line search over the given objective.
VqeResult minimize(const Objective& f, int n_params, const OptimizerConfig& config);

VqeResult vqe_minimize(const PauliSum& h, const Circuit& ansatz, const Circuit& reference,
                       const OptimizerConfig& config);

}  // namespace molvqe
