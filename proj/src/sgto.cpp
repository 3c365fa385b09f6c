#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "molvqe/integrals.hpp"

namespace molvqe {

namespace {

constexpr double kPi = std::numbers::pi;

// Boys function of order zero.
double boys0(double t) {
  if (t < 1e-8) return 1.0 - t / 3.0 + t * t / 10.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(kPi / t) * std::erf(st);
}

double dist2(const Vec3& a, const Vec3& b) {
  double d2 = 0;
  for (int k = 0; k < 3; ++k) d2 += (a[k] - b[k]) * (a[k] - b[k]);
  return d2;
}

Vec3 gaussian_center(double a, const Vec3& A, double b, const Vec3& B) {
  Vec3 p;
  for (int k = 0; k < 3; ++k) p[k] = (a * A[k] + b * B[k]) / (a + b);
  return p;
}

double prim_overlap(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return std::pow(kPi / p, 1.5) * std::exp(-a * b / p * dist2(A, B));
}

double prim_kinetic(double a, const Vec3& A, double b, const Vec3& B) {
  const double mu = a * b / (a + b);
  return mu * (3.0 - 2.0 * mu * dist2(A, B)) * prim_overlap(a, A, b, B);
}

double prim_nuclear(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C) {
  const double p = a + b;
  const Vec3 P = gaussian_center(a, A, b, B);
  return -2.0 * kPi / p * std::exp(-a * b / p * dist2(A, B)) * boys0(p * dist2(P, C));
}

double prim_eri(double a, const Vec3& A, double b, const Vec3& B, double c, const Vec3& C,
                double d, const Vec3& D) {
  const double p = a + b, q = c + d;
  const Vec3 P = gaussian_center(a, A, b, B);
  const Vec3 Q = gaussian_center(c, C, d, D);
  return 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)) *
         std::exp(-a * b / p * dist2(A, B)) * std::exp(-c * d / q * dist2(C, D)) *
         boys0(p * q / (p + q) * dist2(P, Q));
}

// Primitive coefficients scaled by the s-Gaussian norm (2a/pi)^(3/4), then
// the contraction renormalized to unit self-overlap.
struct NormalizedShell {
  Vec3 center;
  std::array<double, 3> exps;
  std::array<double, 3> coeffs;
};

NormalizedShell normalize(const BasisShell& shell) {
  NormalizedShell s{shell.center, shell.exponents, {}};
  for (int i = 0; i < 3; ++i) {
    if (shell.exponents[i] <= 0)
      throw std::invalid_argument("basis: exponents must be positive");
    s.coeffs[i] = shell.coefficients[i] * std::pow(2.0 * shell.exponents[i] / kPi, 0.75);
  }
  double self = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      self += s.coeffs[i] * s.coeffs[j] * prim_overlap(s.exps[i], s.center, s.exps[j], s.center);
  const double scale = 1.0 / std::sqrt(self);
  for (auto& c : s.coeffs) c *= scale;
  return s;
}

template <typename PrimFn>
double contract(const NormalizedShell& f, const NormalizedShell& g, PrimFn prim) {
  double v = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      v += f.coeffs[i] * g.coeffs[j] * prim(f.exps[i], f.center, g.exps[j], g.center);
  return v;
}

}  // namespace

std::string default_basis_path() {
#ifdef MOLVQE_DATA_DIR
  return std::string(MOLVQE_DATA_DIR) + "/sto3g.basis";
#else
  return "data/sto3g.basis";
#endif
}

std::vector<BasisShell> load_basis(const std::string& path, const MolecularGeometry& geometry) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("basis: cannot open " + path);
  struct Entry {
    std::array<double, 3> exps, coeffs;
  };
  std::map<std::string, Entry> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string element;
    Entry e;
    ls >> element >> e.exps[0] >> e.coeffs[0] >> e.exps[1] >> e.coeffs[1] >> e.exps[2] >>
        e.coeffs[2];
    if (!ls && !ls.eof()) throw std::runtime_error("basis: malformed line: " + line);
    table[element] = e;
  }
  std::vector<BasisShell> shells;
  for (const auto& atom : geometry.atoms) {
    if (atom.z != 1)
      throw std::invalid_argument("sgto: only hydrogen-like s-shell atoms are supported");
    auto it = table.find("H");
    if (it == table.end()) throw std::runtime_error("basis: no entry for H");
    BasisShell shell;
    for (int k = 0; k < 3; ++k) shell.center[k] = atom.position[k] * kAngstromToBohr;
    shell.exponents = it->second.exps;
    shell.coefficients = it->second.coeffs;
    shells.push_back(shell);
  }
  return shells;
}

IntegralTensors sgto_integrals(const MolecularGeometry& geometry,
                               const std::vector<BasisShell>& basis) {
  geometry.validate();
  for (const auto& atom : geometry.atoms)
    if (atom.z != 1)
      throw std::invalid_argument("sgto: only hydrogen-like s-shell atoms are supported");
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw std::invalid_argument("sgto: empty basis");

  std::vector<NormalizedShell> fn;
  fn.reserve(n);
  for (const auto& shell : basis) fn.push_back(normalize(shell));

  Eigen::MatrixXd S(n, n), hcore(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S(i, j) = contract(fn[i], fn[j], prim_overlap);
      double h = contract(fn[i], fn[j], prim_kinetic);
      for (const auto& atom : geometry.atoms) {
        Vec3 c;
        for (int k = 0; k < 3; ++k) c[k] = atom.position[k] * kAngstromToBohr;
        h += atom.z * contract(fn[i], fn[j], [&c](double a, const Vec3& A, double b,
                                                  const Vec3& B) {
          return prim_nuclear(a, A, b, B, c);
        });
      }
      hcore(i, j) = h;
    }

  std::vector<double> eri(static_cast<size_t>(n) * n * n * n);
  auto at = [&eri, n](int i, int j, int k, int l) -> double& {
    return eri[((static_cast<size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          double v = 0;
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
              for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                  v += fn[i].coeffs[a] * fn[j].coeffs[b] * fn[k].coeffs[c] * fn[l].coeffs[d] *
                       prim_eri(fn[i].exps[a], fn[i].center, fn[j].exps[b], fn[j].center,
                                fn[k].exps[c], fn[k].center, fn[l].exps[d], fn[l].center);
          for (auto [p, q, r, s] : {std::array{i, j, k, l}, {j, i, k, l}, {i, j, l, k},
                                    {j, i, l, k}, {k, l, i, j}, {l, k, i, j}, {k, l, j, i},
                                    {l, k, j, i}})
            at(p, q, r, s) = v;
        }

  // Lowdin S^(-1/2), then core-Hamiltonian diagonalization for the MO set.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.eigenvalues().minCoeff() < 1e-10)
    throw std::runtime_error("sgto: linearly dependent basis (overlap condition)");
  Eigen::MatrixXd X = es.eigenvectors() *
                      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> core(X.transpose() * hcore * X);
  Eigen::MatrixXd C = X * core.eigenvectors();

  SpatialIntegrals sp(n);
  sp.core_energy = nuclear_repulsion(geometry);
  sp.n_electrons = geometry.electron_count();
  sp.ms2 = geometry.n_alpha() - geometry.n_beta();
  Eigen::MatrixXd h1 = C.transpose() * hcore * C;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sp.one(i, j) = h1(i, j);

  // AO->MO, one index at a time.
  std::vector<double> t1(eri.size()), t2(eri.size());
  auto idx = [n](int i, int j, int k, int l) {
    return ((static_cast<size_t>(i) * n + j) * n + k) * n + l;
  };
  auto transform = [&](const std::vector<double>& src, std::vector<double>& dst, int axis) {
    std::fill(dst.begin(), dst.end(), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double acc = 0;
            for (int m = 0; m < n; ++m) {
              switch (axis) {
                case 0: acc += C(m, i) * src[idx(m, j, k, l)]; break;
                case 1: acc += C(m, j) * src[idx(i, m, k, l)]; break;
                case 2: acc += C(m, k) * src[idx(i, j, m, l)]; break;
                default: acc += C(m, l) * src[idx(i, j, k, m)]; break;
              }
            }
            dst[idx(i, j, k, l)] = acc;
          }
  };
  transform(eri, t1, 0);
  transform(t1, t2, 1);
  transform(t2, t1, 2);
  transform(t1, t2, 3);
  sp.eri = t2;

  return spin_orbital_expand(sp);
}

}  // namespace molvqe
