#pragma once

#include <string>
#include <vector>

namespace molvqe {

enum class GateKind { X, H, S, Sdg, RX, RY, RZ, CNOT };

// Rotation angle is `angle` for fixed gates, or scale * theta[slot] for
// parameterized ones (slot >= 0).
struct Gate {
  GateKind kind = GateKind::X;
  int qubit = 0;
  int target = -1;   // CNOT only; `qubit` is the control
  double angle = 0.0;
  int slot = -1;
  double scale = 1.0;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  int n_params = 0;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void append(Gate g);
  void append(const Circuit& other);  // qubit counts must match
  Circuit inverse() const;            // gate-wise inverse in reverse order

  std::string dump() const;  // one gate per line, e.g. "RZ q1 theta[3]*-2"
};

}  // namespace molvqe
