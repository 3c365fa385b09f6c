#include "molvqe/uccsd.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace molvqe {

// --- Circuit ---

void Circuit::append(Gate g) {
  if (g.qubit < 0 || g.qubit >= n_qubits || (g.kind == GateKind::CNOT &&
                                             (g.target < 0 || g.target >= n_qubits)))
    throw std::out_of_range("circuit: gate qubit index");
  if (g.slot >= 0) n_params = std::max(n_params, g.slot + 1);
  gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits) throw std::invalid_argument("circuit: qubit-count mismatch");
  for (const auto& g : other.gates) append(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
        g.angle = -g.angle;
        g.scale = -g.scale;
        break;
      default: break;
    }
    inv.append(g);
  }
  return inv;
}

std::string Circuit::dump() const {
  static const char* names[] = {"X", "H", "S", "Sdg", "RX", "RY", "RZ", "CNOT"};
  std::ostringstream out;
  for (const auto& g : gates) {
    out << names[static_cast<int>(g.kind)] << " q" << g.qubit;
    if (g.kind == GateKind::CNOT) out << " q" << g.target;
    if (g.kind == GateKind::RX || g.kind == GateKind::RY || g.kind == GateKind::RZ) {
      if (g.slot >= 0)
        out << " theta[" << g.slot << "]*" << g.scale;
      else
        out << " " << g.angle;
    }
    out << "\n";
  }
  return out.str();
}

// --- excitations ---

std::vector<Excitation> enumerate_excitations(int n_spin_orbitals, int n_alpha, int n_beta) {
  const int m = n_spin_orbitals;
  const int half = m / 2;
  if (n_alpha > half || n_beta > half)
    throw std::invalid_argument("enumerate_excitations: occupation exceeds orbital count");
  auto spin = [half](int p) { return p < half ? 0 : 1; };
  std::vector<int> occ, vir;
  for (int p = 0; p < m; ++p) {
    const bool occupied = (p < n_alpha) || (p >= half && p < half + n_beta);
    (occupied ? occ : vir).push_back(p);
  }
  std::vector<Excitation> out;
  for (int i : occ)
    for (int k : vir)
      if (spin(i) == spin(k))
        out.push_back({Excitation::Kind::Single, {i, -1}, {k, -1}, -1});
  for (size_t a = 0; a < occ.size(); ++a)
    for (size_t b = a + 1; b < occ.size(); ++b)
      for (size_t c = 0; c < vir.size(); ++c)
        for (size_t d = c + 1; d < vir.size(); ++d) {
          const int i = occ[a], j = occ[b], k = vir[c], kp = vir[d];
          const int so = spin(i) + spin(j), sv = spin(k) + spin(kp);
          if (so != sv) continue;
          // same-spin pairs must match exactly, not just in projection sum
          if (so == 1 && spin(i) == spin(j)) continue;
          out.push_back({Excitation::Kind::Double, {i, j}, {k, kp}, -1});
        }
  for (size_t s = 0; s < out.size(); ++s) out[s].slot = static_cast<int>(s);
  return out;
}

namespace {

using Key = std::array<int, 5>;

Key excitation_key(const Excitation& e, int half) {
  auto mirror = [half](int p) { return p < 0 ? p : (p < half ? p + half : p - half); };
  Key plain{static_cast<int>(e.kind), e.occupied[0], e.occupied[1], e.virtuals[0],
            e.virtuals[1]};
  Key flip{static_cast<int>(e.kind), mirror(e.occupied[0]), mirror(e.occupied[1]),
           mirror(e.virtuals[0]), mirror(e.virtuals[1])};
  if (e.kind == Excitation::Kind::Double) {
    if (flip[1] > flip[2]) std::swap(flip[1], flip[2]);
    if (flip[3] > flip[4]) std::swap(flip[3], flip[4]);
  }
  return std::min(plain, flip);
}

}  // namespace

int tie_spin_parameters(std::vector<Excitation>& excitations, int n_spin_orbitals) {
  if (excitations.empty()) return 0;
  const int half = n_spin_orbitals / 2;
  std::map<Key, int> slots;
  for (auto& e : excitations) {
    const Key key = excitation_key(e, half);
    auto [it, inserted] = slots.try_emplace(key, static_cast<int>(slots.size()));
    e.slot = it->second;
  }
  return static_cast<int>(slots.size());
}

int slot_count(const std::vector<Excitation>& excitations) {
  int n = 0;
  for (const auto& e : excitations) n = std::max(n, e.slot + 1);
  return n;
}

FermionOperator excitation_operator(const Excitation& e, int n_spin_orbitals) {
  FermionOperator t(n_spin_orbitals);
  if (e.kind == Excitation::Kind::Single) {
    t.add_term({{e.virtuals[0], Ladder::Create}, {e.occupied[0], Ladder::Annihilate}}, 1.0);
  } else {
    t.add_term({{e.virtuals[0], Ladder::Create},
                {e.virtuals[1], Ladder::Create},
                {e.occupied[0], Ladder::Annihilate},
                {e.occupied[1], Ladder::Annihilate}},
               1.0);
  }
  return t;
}

FermionOperator build_generator(const std::vector<Excitation>& excitations,
                                const std::vector<double>& theta, int n_spin_orbitals) {
  if (static_cast<int>(theta.size()) < slot_count(excitations))
    throw std::invalid_argument("build_generator: theta length mismatch");
  FermionOperator gen(n_spin_orbitals);
  for (const auto& e : excitations) {
    FermionOperator t = excitation_operator(e, n_spin_orbitals);
    t *= theta[e.slot];
    gen += t;
    FermionOperator td = adjoint(t);
    td *= -1.0;
    gen += td;
  }
  return normal_order(gen);
}

// --- Trotter circuits ---

namespace {

// exp(i lambda P): conjugate into Z-basis on the support, CNOT ladder,
// RZ(-2 lambda / divisor) on the last support qubit, unwind.
void emit_term_exponential(Circuit& c, const PauliString& p, double lambda, int slot,
                           double divisor) {
  std::vector<int> support;
  for (int q = 0; q < p.n; ++q)
    if (p.letter(q) != 'I') support.push_back(q);
  if (support.empty()) return;  // identity: global phase only

  for (int q : support) {
    const char l = p.letter(q);
    if (l == 'X') {
      c.append({GateKind::H, q});
    } else if (l == 'Y') {
      c.append({GateKind::Sdg, q});
      c.append({GateKind::H, q});
    }
  }
  for (size_t i = 0; i + 1 < support.size(); ++i)
    c.append({GateKind::CNOT, support[i], support[i + 1]});
  Gate rz{GateKind::RZ, support.back()};
  if (slot >= 0) {
    rz.slot = slot;
    rz.scale = -2.0 * lambda / divisor;
  } else {
    rz.angle = -2.0 * lambda / divisor;
  }
  c.append(rz);
  for (size_t i = support.size() - 1; i > 0; --i)
    c.append({GateKind::CNOT, support[i - 1], support[i]});
  for (int q : support) {
    const char l = p.letter(q);
    if (l == 'X') {
      c.append({GateKind::H, q});
    } else if (l == 'Y') {
      c.append({GateKind::H, q});
      c.append({GateKind::S, q});
    }
  }
}

struct TermRef {
  const PauliString* string;
  double lambda;
  int slot;
};

void emit_trotterized(Circuit& c, const std::vector<TermRef>& terms,
                      const TrotterConfig& config) {
  if (config.order != 1 && config.order != 2)
    throw std::invalid_argument("trotter: order must be 1 or 2");
  if (config.steps < 1) throw std::invalid_argument("trotter: steps must be positive");
  const double n = config.steps;
  for (int step = 0; step < config.steps; ++step) {
    if (config.order == 1) {
      for (const auto& t : terms)
        emit_term_exponential(c, *t.string, t.lambda, t.slot, n);
    } else {
      for (const auto& t : terms)
        emit_term_exponential(c, *t.string, t.lambda, t.slot, 2.0 * n);
      for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        emit_term_exponential(c, *it->string, it->lambda, it->slot, 2.0 * n);
    }
  }
}

double imaginary_coefficient(const Complex& c) {
  if (std::abs(c.real()) > 1e-10)
    throw std::invalid_argument("trotter: generator is not anti-Hermitian");
  return c.imag();
}

}  // namespace

Circuit trotter_circuit(const PauliSum& generator, const TrotterConfig& config) {
  Circuit c(generator.n_qubits);
  std::vector<TermRef> terms;
  for (const auto& [s, coeff] : generator.terms)
    terms.push_back({&s, imaginary_coefficient(coeff), -1});
  emit_trotterized(c, terms, config);
  return c;
}

Circuit reference_state_circuit(int n_spin_orbitals, int n_alpha, int n_beta,
                                MappingKind mapping, bool reduced) {
  const auto occ = reference_occupation(n_spin_orbitals, n_alpha, n_beta);
  const uint64_t index = encode_occupation(occ, mapping, reduced);
  const int n = reduced ? n_spin_orbitals - 2 : n_spin_orbitals;
  Circuit c(n);
  for (int q = 0; q < n; ++q)
    if ((index >> q) & 1) c.append({GateKind::X, q});
  return c;
}

Circuit UccsdAnsatz::circuit(const TrotterConfig& config) const {
  Circuit c(n_qubits);
  std::vector<TermRef> terms;
  for (size_t e = 0; e < excitations.size(); ++e)
    for (const auto& [s, coeff] : images[e].terms)
      terms.push_back({&s, imaginary_coefficient(coeff), excitations[e].slot});
  emit_trotterized(c, terms, config);
  c.n_params = std::max(c.n_params, slot_count(excitations));
  return c;
}

UccsdAnsatz build_uccsd_ansatz(int n_spin_orbitals, int n_alpha, int n_beta,
                               MappingKind mapping, bool reduce_two_qubits,
                               bool tie_parameters) {
  if (reduce_two_qubits && mapping != MappingKind::Parity)
    throw std::invalid_argument("uccsd: two-qubit reduction requires the parity mapping");
  UccsdAnsatz ansatz;
  ansatz.excitations = enumerate_excitations(n_spin_orbitals, n_alpha, n_beta);
  if (tie_parameters)
    ansatz.n_params = tie_spin_parameters(ansatz.excitations, n_spin_orbitals);
  else
    ansatz.n_params = slot_count(ansatz.excitations);
  ansatz.n_qubits = reduce_two_qubits ? n_spin_orbitals - 2 : n_spin_orbitals;
  for (const auto& e : ansatz.excitations) {
    FermionOperator t = excitation_operator(e, n_spin_orbitals);
    FermionOperator td = adjoint(t);
    td *= -1.0;
    t += td;
    PauliSum image = map_operator(normal_order(t), mapping);
    if (reduce_two_qubits) image = two_qubit_reduce(image, n_alpha, n_beta);
    ansatz.images.push_back(std::move(image));
  }
  return ansatz;
}

}  // namespace molvqe
