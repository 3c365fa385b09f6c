#include "molvqe/fci.hpp"

#include <bit>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace molvqe {

double ground_energy_dense(const PauliSum& h) {
  if (h.n_qubits > 12) throw std::invalid_argument("ground_energy_dense: dimension guard");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense_matrix(h),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

LanczosResult ground_energy_iterative(const PauliSum& h, const LanczosOptions& opts) {
  if (h.n_qubits > 16) throw std::invalid_argument("ground_energy_iterative: dimension guard");
  const int64_t dim = 1ll << h.n_qubits;
  const PauliSumApplier op(h);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<Complex>> basis;
  std::vector<Complex> v(dim), w(dim);
  for (auto& a : v) a = {gauss(rng), gauss(rng)};
  double nrm = 0;
  for (const auto& a : v) nrm += std::norm(a);
  nrm = std::sqrt(nrm);
  for (auto& a : v) a /= nrm;

  std::vector<double> alpha, beta;
  LanczosResult result;
  double prev_ritz = 0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    basis.push_back(v);
    op.apply(v, w, opts.exec);
    Complex a{0, 0};
    for (int64_t i = 0; i < dim; ++i) a += std::conj(v[i]) * w[i];
    alpha.push_back(a.real());
    // full reorthogonalization against every stored vector
    for (const auto& b : basis) {
      Complex ov{0, 0};
      for (int64_t i = 0; i < dim; ++i) ov += std::conj(b[i]) * w[i];
      for (int64_t i = 0; i < dim; ++i) w[i] -= ov * b[i];
    }
    double bnorm = 0;
    for (const auto& c : w) bnorm += std::norm(c);
    bnorm = std::sqrt(bnorm);

    const int k = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri, Eigen::EigenvaluesOnly);
    const double ritz = es.eigenvalues().minCoeff();
    result.energy = ritz;
    result.iterations = it + 1;
    result.residual = bnorm;
    if (it > 0 && std::abs(ritz - prev_ritz) < opts.tol) {
      result.converged = true;
      return result;
    }
    prev_ritz = ritz;
    if (bnorm < 1e-14) {  // invariant subspace exhausted
      result.converged = true;
      return result;
    }
    beta.push_back(bnorm);
    for (int64_t i = 0; i < dim; ++i) v[i] = w[i] / bnorm;
  }
  return result;  // converged = false, residual reported
}

double sector_ground_energy(const PauliSum& h, int n_alpha, int n_beta, MappingKind mapping,
                            bool reduced) {
  const int m = reduced ? h.n_qubits + 2 : h.n_qubits;  // mode count
  const int half = m / 2;
  if (n_alpha > half || n_beta > half)
    throw std::invalid_argument("sector_ground_energy: bad occupation");

  // enumerate occupation vectors of the sector and their basis-state images
  std::vector<uint64_t> states;
  std::vector<int> f(m);
  std::vector<int> alpha_modes, beta_modes;
  auto choose = [](int n, int k, auto&& emit) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        emit(idx);
        return;
      }
      for (int v = start; v <= n - (k - depth); ++v) {
        idx[depth] = v;
        rec(v + 1, depth + 1);
      }
    };
    rec(0, 0);
  };
  choose(half, n_alpha, [&](const std::vector<int>& occ_a) {
    choose(half, n_beta, [&](const std::vector<int>& occ_b) {
      std::fill(f.begin(), f.end(), 0);
      for (int p : occ_a) f[p] = 1;
      for (int p : occ_b) f[half + p] = 1;
      states.push_back(encode_occupation(f, mapping, reduced));
    });
  });
  if (states.empty()) throw std::invalid_argument("sector_ground_energy: empty sector");

  std::unordered_map<uint64_t, int> row;
  row.reserve(states.size());
  for (size_t i = 0; i < states.size(); ++i) row[states[i]] = static_cast<int>(i);

  const int dim = static_cast<int>(states.size());
  Eigen::MatrixXcd hs = Eigen::MatrixXcd::Zero(dim, dim);
  static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [str, c] : h.terms) {
    const Complex cy = c * kPhase[std::popcount(str.x & str.z) % 4];
    for (int col = 0; col < dim; ++col) {
      const uint64_t b = states[col];
      const uint64_t target = b ^ str.x;
      auto it = row.find(target);
      if (it == row.end()) continue;  // projected out
      const int sign = std::popcount(b & str.z) & 1;
      hs(it->second, col) += sign ? -cy : cy;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace molvqe
