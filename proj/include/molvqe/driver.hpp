#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molvqe/integrals.hpp"
#include "molvqe/mapping.hpp"
#include "molvqe/uccsd.hpp"
#include "molvqe/vqe.hpp"

namespace molvqe {

struct RunConfig {
  MappingKind mapping = MappingKind::Parity;
  bool reduce_two_qubits = false;
  TrotterConfig trotter;
  OptimizerConfig optimizer;
  bool tie_parameters = true;
};

struct PointReport {
  double bond_length = 0.0;  // Angstrom, 0 for plain fixtures
  int n_qubits_before = 0;
  int n_qubits_after = 0;
  double e_vqe = 0.0;
  double e_ref = 0.0;
  double e_fci = 0.0;
  double err_vqe = 0.0;
  double err_ref = 0.0;
  int n_evaluations = 0;
  double wall_seconds = 0.0;
  bool ok = true;
  std::string error;
};

PointReport run_single_point(const IntegralTensors& tensors, const RunConfig& config);

struct ScanPoint {
  double bond_length = 0.0;
  IntegralTensors tensors;
};

struct ScanConfig {
  std::string label;
  std::vector<ScanPoint> points;
  RunConfig run;
};

// Native s-GTO scan points for the built-in geometry templates "h2" and "h3+".
std::vector<ScanPoint> native_scan_points(const std::string& geometry,
                                          const std::vector<double>& bond_lengths,
                                          const std::string& basis_path);

// Fixture files "<label>_<bond>.fcidump" (4-decimal bond length) in a directory.
std::vector<ScanPoint> fixture_scan_points(const std::string& dir, const std::string& label);

std::vector<PointReport> run_scan(const ScanConfig& config);

std::string scan_csv(const std::vector<PointReport>& reports);
void write_scan_csv(const std::vector<PointReport>& reports, const std::string& path);

struct AccuracySummary {
  std::string label;
  double mean_abs_error = 0.0;
  int order_of_magnitude = 0;  // floor(log10(mean |E_VQE - E_FCI|))
  int n_points = 0;
};

// Parses cmd_scan CSVs back in; one summary row per file.
AccuracySummary summarize_csv(const std::string& path, const std::string& label);
std::string render_report(const std::vector<AccuracySummary>& rows);

}  // namespace molvqe
