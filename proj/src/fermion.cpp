#include "molvqe/fermion.hpp"

#include <map>
#include <stdexcept>

namespace molvqe {

FermionOperator FermionOperator::identity(int modes, Complex c) {
  FermionOperator op(modes);
  op.terms.push_back({{}, c});
  return op;
}

FermionOperator& FermionOperator::add_term(std::vector<LadderFactor> factors, Complex c) {
  for (const auto& f : factors)
    if (f.mode < 0 || f.mode >= n_modes) throw std::out_of_range("fermion: mode index");
  terms.push_back({std::move(factors), c});
  return *this;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  if (o.n_modes != n_modes) throw std::invalid_argument("fermion: mode-count mismatch");
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(Complex c) {
  for (auto& t : terms) t.coeff *= c;
  return *this;
}

FermionOperator multiply(const FermionOperator& a, const FermionOperator& b) {
  if (a.n_modes != b.n_modes) throw std::invalid_argument("fermion: mode-count mismatch");
  FermionOperator out(a.n_modes);
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      LadderTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.factors = ta.factors;
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      out.terms.push_back(std::move(t));
    }
  return out;
}

FermionOperator adjoint(const FermionOperator& op) {
  FermionOperator out(op.n_modes);
  out.terms.reserve(op.terms.size());
  for (const auto& t : op.terms) {
    LadderTerm a;
    a.coeff = std::conj(t.coeff);
    a.factors.assign(t.factors.rbegin(), t.factors.rend());
    for (auto& f : a.factors)
      f.kind = (f.kind == Ladder::Create) ? Ladder::Annihilate : Ladder::Create;
    out.terms.push_back(std::move(a));
  }
  return out;
}

namespace {

// One rewriting pass: emits fully normal-ordered factor sequences into `sink`.
// a_p a+_q = delta_pq - a+_q a_p; equal-kind swaps flip the sign; repeated
// identical factors annihilate the term.
void normal_order_term(std::vector<LadderFactor> factors, Complex coeff,
                       std::map<std::vector<LadderFactor>, Complex>& sink) {
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    const auto& f = factors[i];
    const auto& g = factors[i + 1];
    const bool swapped_kind = f.kind == Ladder::Annihilate && g.kind == Ladder::Create;
    if (swapped_kind) {
      if (f.mode == g.mode) {
        // delta term with the pair removed
        std::vector<LadderFactor> rest;
        rest.reserve(factors.size() - 2);
        rest.insert(rest.end(), factors.begin(), factors.begin() + i);
        rest.insert(rest.end(), factors.begin() + i + 2, factors.end());
        normal_order_term(std::move(rest), coeff, sink);
      }
      std::swap(factors[i], factors[i + 1]);
      normal_order_term(std::move(factors), -coeff, sink);
      return;
    }
    if (f.kind == g.kind) {
      if (f.mode == g.mode) return;  // nilpotent
      const bool out_of_order = (f.kind == Ladder::Create) ? f.mode > g.mode : f.mode > g.mode;
      if (out_of_order) {
        std::swap(factors[i], factors[i + 1]);
        normal_order_term(std::move(factors), -coeff, sink);
        return;
      }
    }
  }
  sink[std::move(factors)] += coeff;
}

}  // namespace

FermionOperator normal_order(const FermionOperator& op, double threshold) {
  std::map<std::vector<LadderFactor>, Complex> merged;
  for (const auto& t : op.terms) normal_order_term(t.factors, t.coeff, merged);
  FermionOperator out(op.n_modes);
  for (auto& [factors, coeff] : merged)
    if (std::abs(coeff) >= threshold) out.terms.push_back({factors, coeff});
  return out;
}

FermionOperator assemble_hamiltonian(const IntegralTensors& tensors) {
  const int m = tensors.n_spin_orbitals;
  FermionOperator h(m);
  if (tensors.core_energy != 0.0) h.terms.push_back({{}, tensors.core_energy});
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const double v = tensors.one_body(p, q);
      if (v != 0.0)
        h.terms.push_back({{{p, Ladder::Create}, {q, Ladder::Annihilate}}, v});
    }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double v = tensors.two_body(p, q, r, s);
          if (v != 0.0)
            h.terms.push_back({{{p, Ladder::Create},
                                {q, Ladder::Create},
                                {r, Ladder::Annihilate},
                                {s, Ladder::Annihilate}},
                               0.5 * v});
        }
  return h;
}

}  // namespace molvqe
