#include "molvqe/simulator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace molvqe {

namespace {

constexpr int kMaxQubits = 24;
constexpr int kReductionChunks = 64;  // fixed partial-sum layout, thread-count independent

inline Complex phase_i_pow(int e) {
  static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhase[((e % 4) + 4) % 4];
}

}  // namespace

StateVector StateVector::zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

StateVector StateVector::basis_state(int n_qubits, uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("statevector: qubit count out of range (max 24)");
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps.assign(1ull << n_qubits, 0.0);
  s.amps.at(index) = 1.0;
  return s;
}

double StateVector::norm() const {
  double n = 0;
  for (const auto& a : amps) n += std::norm(a);
  return std::sqrt(n);
}

namespace {

// Applies u (2x2) on the (a0, a1) pairs split by `bit`. Each pair is updated
// independently, so the parallel loop is conflict-free and bitwise equal to
// the serial one.
template <bool Parallel>
void apply_1q(std::vector<Complex>& amps, int qubit, const Complex u[2][2]) {
  const uint64_t dim = amps.size();
  const uint64_t bit = 1ull << qubit;
  const int64_t pairs = static_cast<int64_t>(dim / 2);
#pragma omp parallel for if (Parallel) schedule(static)
  for (int64_t p = 0; p < pairs; ++p) {
    const uint64_t low = static_cast<uint64_t>(p) & (bit - 1);
    const uint64_t high = (static_cast<uint64_t>(p) & ~(bit - 1)) << 1;
    const uint64_t i0 = high | low;
    const uint64_t i1 = i0 | bit;
    const Complex a0 = amps[i0], a1 = amps[i1];
    amps[i0] = u[0][0] * a0 + u[0][1] * a1;
    amps[i1] = u[1][0] * a0 + u[1][1] * a1;
  }
}

template <bool Parallel>
void apply_cnot(std::vector<Complex>& amps, int control, int target) {
  const uint64_t dim = amps.size();
  const uint64_t cbit = 1ull << control, tbit = 1ull << target;
#pragma omp parallel for if (Parallel) schedule(static)
  for (int64_t i = 0; i < static_cast<int64_t>(dim); ++i) {
    const uint64_t u = static_cast<uint64_t>(i);
    if ((u & cbit) && !(u & tbit)) std::swap(amps[u], amps[u | tbit]);
  }
}

double gate_angle(const Gate& g, std::span<const double> theta) {
  if (g.slot < 0) return g.angle;
  if (g.slot >= static_cast<int>(theta.size()))
    throw std::invalid_argument("simulator: unresolved parameter slot");
  return g.scale * theta[g.slot];
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate, std::span<const double> theta,
                Execution exec) {
  if (gate.qubit < 0 || gate.qubit >= state.n_qubits)
    throw std::out_of_range("simulator: gate qubit index");
  const bool par = exec == Execution::Parallel;
  Complex u[2][2] = {};
  switch (gate.kind) {
    case GateKind::X:
      u[0][1] = u[1][0] = 1.0;
      break;
    case GateKind::H:
      u[0][0] = u[0][1] = u[1][0] = 1.0 / std::sqrt(2.0);
      u[1][1] = -u[0][0];
      break;
    case GateKind::S:
      u[0][0] = 1.0;
      u[1][1] = {0, 1};
      break;
    case GateKind::Sdg:
      u[0][0] = 1.0;
      u[1][1] = {0, -1};
      break;
    case GateKind::RX: {
      const double a = gate_angle(gate, theta) / 2;
      u[0][0] = u[1][1] = std::cos(a);
      u[0][1] = u[1][0] = Complex{0, -std::sin(a)};
      break;
    }
    case GateKind::RY: {
      const double a = gate_angle(gate, theta) / 2;
      u[0][0] = u[1][1] = std::cos(a);
      u[0][1] = -std::sin(a);
      u[1][0] = std::sin(a);
      break;
    }
    case GateKind::RZ: {
      const double a = gate_angle(gate, theta) / 2;
      u[0][0] = {std::cos(a), -std::sin(a)};
      u[1][1] = {std::cos(a), std::sin(a)};
      break;
    }
    case GateKind::CNOT:
      if (gate.target < 0 || gate.target >= state.n_qubits || gate.target == gate.qubit)
        throw std::out_of_range("simulator: CNOT target index");
      if (par)
        apply_cnot<true>(state.amps, gate.qubit, gate.target);
      else
        apply_cnot<false>(state.amps, gate.qubit, gate.target);
      return;
  }
  if (par)
    apply_1q<true>(state.amps, gate.qubit, u);
  else
    apply_1q<false>(state.amps, gate.qubit, u);
}

StateVector run_circuit(const Circuit& circuit, const StateVector& initial,
                        std::span<const double> theta, Execution exec) {
  if (circuit.n_qubits != initial.n_qubits)
    throw std::invalid_argument("simulator: circuit/state qubit mismatch");
  StateVector state = initial;
  for (const auto& g : circuit.gates) apply_gate(state, g, theta, exec);
  return state;
}

// --- Pauli-sum application ---

PauliSumApplier::PauliSumApplier(const PauliSum& s) : n_qubits(s.n_qubits) {
  std::map<uint64_t, Group> by_mask;
  for (const auto& [str, c] : s.terms) {
    Group& g = by_mask[str.x];
    g.x_mask = str.x;
    g.z_masks.push_back(str.z);
    g.coeffs.push_back(c * phase_i_pow(std::popcount(str.x & str.z)));
  }
  groups.reserve(by_mask.size());
  for (auto& [mask, g] : by_mask) groups.push_back(std::move(g));
}

void PauliSumApplier::apply(std::span<const Complex> x, std::span<Complex> y,
                            Execution exec) const {
  const int64_t dim = 1ll << n_qubits;
  if (static_cast<int64_t>(x.size()) != dim || static_cast<int64_t>(y.size()) != dim)
    throw std::invalid_argument("apply: dimension mismatch");
  std::fill(y.begin(), y.end(), Complex{0, 0});
  const bool par = exec == Execution::Parallel;
  for (const auto& g : groups) {
    const size_t nt = g.z_masks.size();
    // targets b ^ x_mask are distinct for distinct b: no write conflicts
#pragma omp parallel for if (par) schedule(static)
    for (int64_t b = 0; b < dim; ++b) {
      Complex acc{0, 0};
      for (size_t t = 0; t < nt; ++t) {
        const int sign = std::popcount(static_cast<uint64_t>(b) & g.z_masks[t]) & 1;
        acc += sign ? -g.coeffs[t] : g.coeffs[t];
      }
      y[static_cast<uint64_t>(b) ^ g.x_mask] += acc * x[b];
    }
  }
}

double PauliSumApplier::expectation(std::span<const Complex> x, Execution exec) const {
  const int64_t dim = 1ll << n_qubits;
  if (static_cast<int64_t>(x.size()) != dim)
    throw std::invalid_argument("expectation: dimension mismatch");
  const bool par = exec == Execution::Parallel;
  Complex total{0, 0};
  // fixed chunk layout so the summation order does not depend on thread count
  const int64_t nchunks = std::min<int64_t>(kReductionChunks, dim);
  const int64_t chunk = (dim + nchunks - 1) / nchunks;
  for (const auto& g : groups) {
    std::vector<Complex> partial(nchunks, Complex{0, 0});
#pragma omp parallel for if (par) schedule(static)
    for (int64_t ci = 0; ci < nchunks; ++ci) {
      Complex acc{0, 0};
      const int64_t lo = ci * chunk, hi = std::min(dim, lo + chunk);
      for (int64_t b = lo; b < hi; ++b) {
        Complex c{0, 0};
        for (size_t t = 0; t < g.z_masks.size(); ++t) {
          const int sign = std::popcount(static_cast<uint64_t>(b) & g.z_masks[t]) & 1;
          c += sign ? -g.coeffs[t] : g.coeffs[t];
        }
        acc += std::conj(x[static_cast<uint64_t>(b) ^ g.x_mask]) * c * x[b];
      }
      partial[ci] = acc;
    }
    for (const auto& p : partial) total += p;
  }
  if (std::abs(total.imag()) > 1e-10)
    throw std::runtime_error("expectation: imaginary residual exceeds 1e-10");
  return total.real();
}

double expectation(const StateVector& state, const PauliSum& h, Execution exec) {
  if (state.n_qubits != h.n_qubits)
    throw std::invalid_argument("expectation: qubit-count mismatch");
  if (!h.is_hermitian()) throw std::invalid_argument("expectation: non-Hermitian sum");
  return PauliSumApplier(h).expectation(state.amps, exec);
}

}  // namespace molvqe
