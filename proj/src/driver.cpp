#include "molvqe/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "molvqe/fci.hpp"
#include "molvqe/fermion.hpp"

namespace molvqe {

PointReport run_single_point(const IntegralTensors& tensors, const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  PointReport rep;
  const int m = tensors.n_spin_orbitals;
  rep.n_qubits_before = m;
  rep.n_qubits_after = config.reduce_two_qubits ? m - 2 : m;

  rep.e_ref = reference_energy(tensors);

  PauliSum h = map_operator(assemble_hamiltonian(tensors), config.mapping);
  if (config.reduce_two_qubits) h = two_qubit_reduce(h, tensors.n_alpha, tensors.n_beta);

  rep.e_fci = sector_ground_energy(h, tensors.n_alpha, tensors.n_beta, config.mapping,
                                   config.reduce_two_qubits);

  const UccsdAnsatz ansatz =
      build_uccsd_ansatz(m, tensors.n_alpha, tensors.n_beta, config.mapping,
                         config.reduce_two_qubits, config.tie_parameters);
  const Circuit circuit = ansatz.circuit(config.trotter);
  const Circuit reference = reference_state_circuit(
      m, tensors.n_alpha, tensors.n_beta, config.mapping, config.reduce_two_qubits);

  const VqeResult vqe = vqe_minimize(h, circuit, reference, config.optimizer);
  rep.e_vqe = vqe.energy;
  rep.n_evaluations = vqe.n_evaluations;
  rep.err_vqe = rep.e_vqe - rep.e_fci;
  rep.err_ref = rep.e_ref - rep.e_fci;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<ScanPoint> native_scan_points(const std::string& geometry,
                                          const std::vector<double>& bond_lengths,
                                          const std::string& basis_path) {
  if (bond_lengths.empty()) throw std::invalid_argument("scan: no bond lengths");
  std::vector<double> sorted = bond_lengths;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) throw std::invalid_argument("scan: duplicate bond length");
  for (double r : sorted)
    if (r <= 0) throw std::invalid_argument("scan: bond lengths must be positive");

  std::vector<ScanPoint> points;
  for (double r : sorted) {
    MolecularGeometry geo;
    if (geometry == "h2") {
      geo.atoms = {{1, {0, 0, 0}}, {1, {0, 0, r}}};
      geo.charge = 0;
    } else if (geometry == "h3+") {
      const double h = r * std::sqrt(3.0) / 2.0;
      geo.atoms = {{1, {0, 0, 0}}, {1, {r, 0, 0}}, {1, {r / 2, h, 0}}};
      geo.charge = 1;
    } else {
      throw std::invalid_argument("scan: unknown geometry template: " + geometry);
    }
    const auto basis = load_basis(basis_path, geo);
    points.push_back({r, sgto_integrals(geo, basis)});
  }
  return points;
}

std::vector<ScanPoint> fixture_scan_points(const std::string& dir, const std::string& label) {
  namespace fs = std::filesystem;
  std::vector<ScanPoint> points;
  const std::string prefix = label + "_";
  if (!fs::is_directory(dir)) throw std::runtime_error("scan: fixture directory missing: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!name.starts_with(prefix) || !name.ends_with(".fcidump")) continue;
    const std::string bond = name.substr(prefix.size(), name.size() - prefix.size() - 8);
    double r = 0;
    try {
      size_t used = 0;
      r = std::stod(bond, &used);
      if (used != bond.size()) continue;
    } catch (const std::exception&) {
      continue;
    }
    points.push_back({r, parse_fcidump_file(entry.path().string())});
  }
  if (points.empty())
    throw std::runtime_error("scan: no fixtures for label '" + label + "' in " + dir);
  std::sort(points.begin(), points.end(),
            [](const ScanPoint& a, const ScanPoint& b) { return a.bond_length < b.bond_length; });
  return points;
}

std::vector<PointReport> run_scan(const ScanConfig& config) {
  std::vector<PointReport> reports;
  for (const auto& point : config.points) {
    PointReport rep;
    try {
      rep = run_single_point(point.tensors, config.run);
    } catch (const std::exception& e) {
      rep.ok = false;
      rep.error = e.what();
    }
    rep.bond_length = point.bond_length;
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::string scan_csv(const std::vector<PointReport>& reports) {
  std::ostringstream out;
  out << "bond_length_angstrom,e_vqe_hartree,e_ref_hartree,e_fci_hartree,err_vqe,err_ref,"
         "n_evaluations,n_qubits\n";
  char buf[320];
  for (const auto& r : reports) {
    if (r.ok) {
      std::snprintf(buf, sizeof(buf), "%.4f,%.10f,%.10f,%.10f,%.3e,%.3e,%d,%d\n",
                    r.bond_length, r.e_vqe, r.e_ref, r.e_fci, r.err_vqe, r.err_ref,
                    r.n_evaluations, r.n_qubits_after);
    } else {
      std::snprintf(buf, sizeof(buf), "%.4f,,,,,,,\n", r.bond_length);
    }
    out << buf;
  }
  return out.str();
}

void write_scan_csv(const std::vector<PointReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("scan: cannot write " + path);
  out << scan_csv(reports);
}

AccuracySummary summarize_csv(const std::string& path, const std::string& label) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("report: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("bond_length_angstrom,"))
    throw std::runtime_error("report: malformed CSV header in " + path);
  AccuracySummary sum;
  sum.label = label;
  double total = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    size_t start = 0;
    for (size_t pos = 0; pos <= line.size(); ++pos) {
      if (pos == line.size() || line[pos] == ',') {
        cols.push_back(line.substr(start, pos - start));
        start = pos + 1;
      }
    }
    if (cols.size() != 8) throw std::runtime_error("report: malformed CSV row: " + line);
    if (cols[1].empty()) continue;  // failed point
    total += std::abs(std::stod(cols[4]));
    ++sum.n_points;
  }
  if (sum.n_points == 0) throw std::runtime_error("report: no data rows in " + path);
  sum.mean_abs_error = total / sum.n_points;
  sum.order_of_magnitude =
      sum.mean_abs_error > 0 ? static_cast<int>(std::floor(std::log10(sum.mean_abs_error)))
                             : -16;
  return sum;
}

std::string render_report(const std::vector<AccuracySummary>& rows) {
  std::ostringstream out;
  out << "molecule        points  mean|E_VQE-E_FCI|   accuracy\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-15s %6d  %17.3e   10^%d\n", r.label.c_str(),
                  r.n_points, r.mean_abs_error, r.order_of_magnitude);
    out << buf;
  }
  return out.str();
}

}  // namespace molvqe
