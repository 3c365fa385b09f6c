#include "molvqe/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace molvqe {

void MolecularGeometry::validate() const {
  if (atoms.empty()) throw std::invalid_argument("geometry: no atoms");
  for (const auto& a : atoms)
    if (a.z <= 0) throw std::invalid_argument("geometry: nuclear charge must be positive");
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      double d2 = 0;
      for (int k = 0; k < 3; ++k) {
        const double d = atoms[i].position[k] - atoms[j].position[k];
        d2 += d * d;
      }
      if (d2 == 0.0) throw std::invalid_argument("geometry: coincident nuclei");
    }
  if (electron_count() < 0) throw std::invalid_argument("geometry: negative electron count");
  if (multiplicity < 1) throw std::invalid_argument("geometry: multiplicity must be positive");
}

double nuclear_repulsion(const MolecularGeometry& geometry) {
  geometry.validate();
  double e = 0.0;
  const auto& atoms = geometry.atoms;
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t j = i + 1; j < atoms.size(); ++j) {
      double d2 = 0;
      for (int k = 0; k < 3; ++k) {
        const double d = (atoms[i].position[k] - atoms[j].position[k]) * kAngstromToBohr;
        d2 += d * d;
      }
      e += atoms[i].z * atoms[j].z / std::sqrt(d2);
    }
  return e;
}

void IntegralTensors::validate(double tol) const {
  const int m = n_spin_orbitals;
  if (m <= 0 || m % 2 != 0)
    throw std::invalid_argument("tensors: n_spin_orbitals must be even and positive");
  if (n_alpha + n_beta > m) throw std::invalid_argument("tensors: occupation exceeds orbitals");
  const int half = m / 2;
  auto spin = [half](int p) { return p < half ? 0 : 1; };
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (std::abs(one_body(p, q) - one_body(q, p)) > tol)
        throw std::invalid_argument("tensors: h_pq not symmetric");
      if (spin(p) != spin(q) && one_body(p, q) != 0.0)
        throw std::invalid_argument("tensors: spin-forbidden one-body entry");
    }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double v = two_body(p, q, r, s);
          if ((spin(p) != spin(s) || spin(q) != spin(r)) && v != 0.0)
            throw std::invalid_argument("tensors: spin-forbidden two-body entry");
          // 8-fold group of the stored <pq|sr> layout
          if (std::abs(v - two_body(s, q, r, p)) > tol ||
              std::abs(v - two_body(p, r, q, s)) > tol ||
              std::abs(v - two_body(q, p, s, r)) > tol)
            throw std::invalid_argument("tensors: broken permutational symmetry");
        }
}

IntegralTensors spin_orbital_expand(const SpatialIntegrals& sp) {
  const int n = sp.n_orbitals;
  IntegralTensors t(2 * n);
  t.core_energy = sp.core_energy;
  t.n_alpha = (sp.n_electrons + sp.ms2) / 2;
  t.n_beta = sp.n_electrons - t.n_alpha;
  auto spat = [n](int p) { return p % n; };
  auto spin = [n](int p) { return p / n; };
  const int m = 2 * n;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (spin(p) == spin(q)) t.one_body(p, q) = sp.one(spat(p), spat(q));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          if (spin(p) == spin(s) && spin(q) == spin(r))
            t.two_body(p, q, r, s) = sp.chem(spat(p), spat(s), spat(q), spat(r));
  return t;
}

namespace {

SpatialIntegrals spatial_extract(const IntegralTensors& t) {
  const int n = t.n_spatial();
  SpatialIntegrals sp(n);
  sp.core_energy = t.core_energy;
  sp.n_electrons = t.n_alpha + t.n_beta;
  sp.ms2 = t.n_alpha - t.n_beta;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sp.one(i, j) = t.one_body(i, j);
  // (IJ|KL) = two_body(I_a, K_b, L_b, J_a): opposite-spin pick avoids the
  // same-spin Coulomb/exchange mixing.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          sp.chem(i, j, k, l) = t.two_body(i, k + n, l + n, j);
  return sp;
}

int parse_namelist_int(const std::string& header, const std::string& key) {
  const size_t pos = header.find(key + "=");
  if (pos == std::string::npos)
    throw std::invalid_argument("fcidump: missing " + key + " in header");
  size_t start = pos + key.size() + 1;
  size_t end = start;
  while (end < header.size() && (std::isdigit(header[end]) || header[end] == '-' ||
                                 header[end] == '+'))
    ++end;
  if (end == start) throw std::invalid_argument("fcidump: malformed " + key);
  return std::stoi(header.substr(start, end - start));
}

}  // namespace

IntegralTensors parse_fcidump(std::istream& in) {
  std::string header, line;
  bool in_header = true;
  while (in_header && std::getline(in, line)) {
    header += line + "\n";
    if (line.find("&END") != std::string::npos || line.find("/") != std::string::npos)
      in_header = false;
  }
  if (in_header) throw std::invalid_argument("fcidump: header not terminated");
  if (header.find("&FCI") == std::string::npos)
    throw std::invalid_argument("fcidump: missing &FCI namelist");
  const int norb = parse_namelist_int(header, "NORB");
  const int nelec = parse_namelist_int(header, "NELEC");
  const int ms2 = parse_namelist_int(header, "MS2");
  if (norb <= 0) throw std::invalid_argument("fcidump: NORB must be positive");

  SpatialIntegrals sp(norb);
  sp.n_electrons = nelec;
  sp.ms2 = ms2;
  std::vector<bool> seen_one(static_cast<size_t>(norb) * norb, false);
  std::vector<bool> seen_two(sp.eri.size(), false);
  bool seen_core = false;

  double value;
  int i, j, k, l;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      value = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("fcidump: non-numeric value field: " + tok);
    }
    if (!(in >> i >> j >> k >> l))
      throw std::invalid_argument("fcidump: truncated record");
    for (int idx : {i, j, k, l})
      if (idx < 0 || idx > norb) throw std::invalid_argument("fcidump: index out of range 1..NORB");
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (seen_core && sp.core_energy != value)
        throw std::invalid_argument("fcidump: conflicting core-energy entries");
      sp.core_energy = value;
      seen_core = true;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) throw std::invalid_argument("fcidump: bad one-electron indices");
      const int a = i - 1, b = j - 1;
      for (auto [p, q] : {std::pair{a, b}, {b, a}}) {
        const size_t key = static_cast<size_t>(p) * norb + q;
        if (seen_one[key] && sp.one(p, q) != value)
          throw std::invalid_argument("fcidump: conflicting one-electron entries");
        sp.one(p, q) = value;
        seen_one[key] = true;
      }
    } else if (i == 0 || j == 0 || k == 0 || l == 0) {
      throw std::invalid_argument("fcidump: bad index pattern");
    } else {
      const int a = i - 1, b = j - 1, c = k - 1, d = l - 1;
      for (auto [p, q, r, s] : {std::array{a, b, c, d}, {b, a, c, d}, {a, b, d, c},
                                {b, a, d, c}, {c, d, a, b}, {d, c, a, b}, {c, d, b, a},
                                {d, c, b, a}}) {
        const size_t n = norb;
        const size_t key = ((static_cast<size_t>(p) * n + q) * n + r) * n + s;
        if (seen_two[key] && sp.chem(p, q, r, s) != value)
          throw std::invalid_argument("fcidump: conflicting two-electron entries");
        sp.chem(p, q, r, s) = value;
        seen_two[key] = true;
      }
    }
  }
  return spin_orbital_expand(sp);
}

IntegralTensors parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fcidump: cannot open " + path);
  return parse_fcidump(in);
}

void write_fcidump(const IntegralTensors& tensors, std::ostream& out) {
  const SpatialIntegrals sp = spatial_extract(tensors);
  const int n = sp.n_orbitals;
  out << "&FCI NORB=" << n << ",NELEC=" << sp.n_electrons << ",MS2=" << sp.ms2 << ",\n";
  out << "&END\n";
  out << std::setprecision(17) << std::scientific;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= (k == i ? j : k); ++l) {
          const double v = sp.chem(i, j, k, l);
          if (v != 0.0)
            out << " " << v << " " << i + 1 << " " << j + 1 << " " << k + 1 << " " << l + 1
                << "\n";
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (sp.one(i, j) != 0.0)
        out << " " << sp.one(i, j) << " " << i + 1 << " " << j + 1 << " 0 0\n";
  out << " " << sp.core_energy << " 0 0 0 0\n";
}

double reference_energy(const IntegralTensors& t) {
  const int m = t.n_spin_orbitals;
  const int half = m / 2;
  if (t.n_alpha > half || t.n_beta > half)
    throw std::invalid_argument("reference_energy: occupation exceeds orbital count");
  std::vector<int> occ;
  for (int p = 0; p < t.n_alpha; ++p) occ.push_back(p);
  for (int p = 0; p < t.n_beta; ++p) occ.push_back(half + p);
  double e = t.core_energy;
  for (int p : occ) e += t.one_body(p, p);
  for (size_t a = 0; a < occ.size(); ++a)
    for (size_t b = a + 1; b < occ.size(); ++b) {
      const int p = occ[a], q = occ[b];
      e += t.two_body(p, q, q, p) - t.two_body(p, q, p, q);  // Coulomb - exchange
    }
  return e;
}

}  // namespace molvqe
