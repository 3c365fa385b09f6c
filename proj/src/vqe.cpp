#include "molvqe/vqe.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace molvqe {

double energy_at(const std::vector<double>& theta, const PauliSum& h, const Circuit& ansatz,
                 const Circuit& reference, Execution exec) {
  StateVector state = StateVector::zero_state(h.n_qubits);
  state = run_circuit(reference, state, theta, exec);
  state = run_circuit(ansatz, state, theta, exec);
  return expectation(state, h, exec);
}

std::vector<double> numerical_gradient(const std::vector<double>& theta, const Objective& f,
                                       double step) {
  if (step <= 0) throw std::invalid_argument("numerical_gradient: step must be positive");
  std::vector<double> g(theta.size());
  std::vector<double> probe = theta;
  for (size_t k = 0; k < theta.size(); ++k) {
    probe[k] = theta[k] + step;
    const double ep = f(probe);
    probe[k] = theta[k] - step;
    const double em = f(probe);
    probe[k] = theta[k];
    g[k] = (ep - em) / (2 * step);
  }
  return g;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

VqeResult minimize(const Objective& f, int n_params, const OptimizerConfig& config) {
  if (config.tol_energy <= 0 || config.tol_gradient <= 0)
    throw std::invalid_argument("optimizer: tolerances must be positive");
  if (config.max_evaluations < 1)
    throw std::invalid_argument("optimizer: max evaluations must be >= 1");

  VqeResult result;
  std::vector<double> x = config.initial_theta;
  if (x.empty()) x.assign(n_params, 0.0);
  if (static_cast<int>(x.size()) != n_params)
    throw std::invalid_argument("optimizer: initial theta length mismatch");

  int evals = 0;
  auto eval = [&](const std::vector<double>& t) {
    ++evals;
    return f(t);
  };

  double fx = eval(x);
  result.trace.emplace_back(evals, fx);

  if (n_params == 0) {
    result.theta = x;
    result.energy = fx;
    result.n_evaluations = evals;
    result.converged = true;
    result.reason = "no parameters";
    return result;
  }

  auto grad = [&](const std::vector<double>& t) {
    std::vector<double> g(t.size());
    std::vector<double> probe = t;
    for (size_t k = 0; k < t.size(); ++k) {
      probe[k] = t[k] + config.gradient_step;
      const double ep = eval(probe);
      probe[k] = t[k] - config.gradient_step;
      const double em = eval(probe);
      probe[k] = t[k];
      g[k] = (ep - em) / (2 * config.gradient_step);
    }
    return g;
  };

  std::vector<double> g = grad(x);
  // L-BFGS history
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  std::string reason;
  bool converged = false;
  while (true) {
    const double gnorm = norm2(g);
    if (gnorm < config.tol_gradient) {
      converged = true;
      reason = "gradient norm below tolerance";
      break;
    }
    if (evals >= config.max_evaluations) {
      reason = "evaluation budget exhausted";
      break;
    }

    // two-loop recursion
    std::vector<double> d = g;
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * dot(s_hist[i], d);
      for (size_t k = 0; k < d.size(); ++k) d[k] -= alpha[i] * y_hist[i][k];
    }
    if (!s_hist.empty()) {
      const double gamma =
          dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (auto& v : d) v *= gamma;
    }
    for (size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * dot(y_hist[i], d);
      for (size_t k = 0; k < d.size(); ++k) d[k] += (alpha[i] - beta) * s_hist[i][k];
    }
    for (auto& v : d) v = -v;
    if (dot(d, g) >= 0) {  // not a descent direction, fall back
      for (size_t k = 0; k < d.size(); ++k) d[k] = -g[k];
    }

    // backtracking Armijo line search
    double step = 1.0;
    const double slope = dot(g, d);
    const double c1 = 1e-4;
    std::vector<double> xn(x.size());
    double fn = fx;
    bool accepted = false;
    for (int bt = 0; bt < 40 && evals < config.max_evaluations; ++bt) {
      for (size_t k = 0; k < x.size(); ++k) xn[k] = x[k] + step * d[k];
      fn = eval(xn);
      if (fn <= fx + c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (evals >= config.max_evaluations)
        reason = "evaluation budget exhausted";
      else {
        converged = true;
        reason = "line search could not decrease the energy";
      }
      break;
    }

    const double df = fx - fn;
    std::vector<double> gn = grad(xn);
    std::vector<double> s(x.size()), yv(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
      s[k] = xn[k] - x[k];
      yv[k] = gn[k] - g[k];
    }
    const double sy = dot(s, yv);
    if (sy > 1e-14) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > config.lbfgs_memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x = xn;
    fx = fn;
    g = std::move(gn);
    result.trace.emplace_back(evals, fx);

    if (df < config.tol_energy) {
      converged = true;
      reason = "energy change below tolerance";
      break;
    }
  }

  result.theta = x;
  result.energy = fx;
  result.n_evaluations = evals;
  result.converged = converged;
  result.reason = reason;
  return result;
}

VqeResult vqe_minimize(const PauliSum& h, const Circuit& ansatz, const Circuit& reference,
                       const OptimizerConfig& config) {
  if (h.n_qubits != ansatz.n_qubits || h.n_qubits != reference.n_qubits)
    throw std::invalid_argument("vqe: qubit-count mismatch");
  Objective f = [&](const std::vector<double>& theta) {
    return energy_at(theta, h, ansatz, reference, config.exec);
  };
  return minimize(f, ansatz.n_params, config);
}

}  // namespace molvqe
