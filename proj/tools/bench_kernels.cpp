// Timing comparison of the serial reference kernels against the OpenMP ones:
// single-qubit gates, a Trotter-style circuit, Pauli-sum application and
// Hamiltonian-averaging expectation.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "molvqe/fci.hpp"
#include "molvqe/simulator.hpp"

using namespace molvqe;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

PauliSum random_sum(int n, int n_terms, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  PauliSum s(n);
  const char letters[] = "IXYZ";
  while (s.terms.size() < static_cast<size_t>(n_terms)) {
    PauliString p = PauliString::identity(n);
    for (int q = 0; q < n; ++q) {
      const PauliString one = PauliString::single(n, q, letters[letter(rng)]);
      p.x |= one.x;
      p.z |= one.z;
    }
    s.add(p, coeff(rng));
  }
  return s;
}

}  // namespace

int main() {
  const int n = 20;
  std::printf("qubits: %d, threads: %d\n\n", n, omp_get_max_threads());
  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [ms]", "openmp [ms]", "speedup");

  StateVector state = StateVector::zero_state(n);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (auto& a : state.amps) a = {gauss(rng), gauss(rng)};
  const double nrm = state.norm();
  for (auto& a : state.amps) a /= nrm;

  auto row = [](const char* name, double ts, double tp) {
    std::printf("%-28s %12.3f %12.3f %8.2fx\n", name, ts * 1e3, tp * 1e3, ts / tp);
  };

  {
    Gate h{GateKind::H, n / 2};
    StateVector s1 = state, s2 = state;
    const double ts = seconds([&] { apply_gate(s1, h, {}, Execution::Serial); }, 50);
    const double tp = seconds([&] { apply_gate(s2, h, {}, Execution::Parallel); }, 50);
    row("apply_gate H", ts, tp);
  }
  {
    Circuit c(n);
    for (int q = 0; q < n; ++q) c.append({GateKind::H, q});
    for (int q = 0; q + 1 < n; ++q) c.append({GateKind::CNOT, q, q + 1});
    for (int q = 0; q < n; ++q) c.append({GateKind::RZ, q, -1, 0.3});
    const double ts = seconds([&] { run_circuit(c, state, {}, Execution::Serial); }, 5);
    const double tp = seconds([&] { run_circuit(c, state, {}, Execution::Parallel); }, 5);
    row("run_circuit (3n gates)", ts, tp);
  }

  const PauliSum h = random_sum(n, 500, 42);
  const PauliSumApplier applier(h);
  {
    std::vector<Complex> y(state.amps.size());
    const double ts = seconds([&] { applier.apply(state.amps, y, Execution::Serial); }, 3);
    const double tp = seconds([&] { applier.apply(state.amps, y, Execution::Parallel); }, 3);
    row("pauli apply (500 terms)", ts, tp);
  }
  {
    const double ts = seconds([&] { (void)applier.expectation(state.amps, Execution::Serial); }, 3);
    const double tp =
        seconds([&] { (void)applier.expectation(state.amps, Execution::Parallel); }, 3);
    row("expectation (500 terms)", ts, tp);
  }
  {
    const PauliSum hl = random_sum(14, 200, 11);
    LanczosOptions serial_opts;
    serial_opts.exec = Execution::Serial;
    LanczosOptions parallel_opts;
    const double ts = seconds([&] { ground_energy_iterative(hl, serial_opts); }, 1);
    const double tp = seconds([&] { ground_energy_iterative(hl, parallel_opts); }, 1);
    row("lanczos 14q (200 terms)", ts, tp);
  }
  return 0;
}
