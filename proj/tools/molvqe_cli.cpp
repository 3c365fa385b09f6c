#include <omp.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "molvqe/driver.hpp"

namespace {

struct CommonOptions {
  std::string fixture_dir;
  std::string geometry;
  std::string molecule;
  std::vector<double> bond_lengths;
  std::string mapping = "parity";
  bool reduce = false;
  int trotter_order = 1;
  int trotter_steps = 1;
  double tol_energy = 1e-9;
  int max_evals = 10000;
  int threads = 0;
  std::string output;
  std::string basis_file;
  bool untied_parameters = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--fixture-dir", opt.fixture_dir, "Directory of <label>_<bond>.fcidump files");
  cmd->add_option("--geometry", opt.geometry, "Native geometry template (h2, h3+)");
  cmd->add_option("--molecule", opt.molecule, "Fixture label inside --fixture-dir");
  cmd->add_option("--bond-lengths", opt.bond_lengths, "Bond lengths in Angstrom");
  cmd->add_option("--mapping", opt.mapping, "Fermion-to-qubit mapping")
      ->check(CLI::IsMember({"jw", "parity"}));
  cmd->add_flag("--reduce-two-qubits", opt.reduce, "Apply the Z2 two-qubit reduction");
  cmd->add_option("--trotter-order", opt.trotter_order)->check(CLI::IsMember({1, 2}));
  cmd->add_option("--trotter-steps", opt.trotter_steps)->check(CLI::PositiveNumber);
  cmd->add_option("--tol-energy", opt.tol_energy, "Energy convergence tolerance (Hartree)");
  cmd->add_option("--max-evals", opt.max_evals, "Objective evaluation budget");
  cmd->add_option("--threads", opt.threads, "OpenMP thread count (0 = default)");
  cmd->add_option("--output", opt.output, "Output path (CSV for scan)");
  cmd->add_option("--basis-file", opt.basis_file, "s-shell basis data file");
  cmd->add_flag("--untied-parameters", opt.untied_parameters,
                "Do not share angles between spin-mirror excitations");
}

molvqe::RunConfig run_config(const CommonOptions& opt) {
  molvqe::RunConfig cfg;
  cfg.mapping = opt.mapping == "jw" ? molvqe::MappingKind::JordanWigner
                                    : molvqe::MappingKind::Parity;
  cfg.reduce_two_qubits = opt.reduce;
  cfg.trotter.order = opt.trotter_order;
  cfg.trotter.steps = opt.trotter_steps;
  cfg.optimizer.tol_energy = opt.tol_energy;
  cfg.optimizer.max_evaluations = opt.max_evals;
  cfg.tie_parameters = !opt.untied_parameters;
  return cfg;
}

std::vector<molvqe::ScanPoint> resolve_points(const CommonOptions& opt) {
  if (!opt.geometry.empty()) {
    std::string basis = opt.basis_file.empty() ? molvqe::default_basis_path() : opt.basis_file;
    std::vector<double> bonds = opt.bond_lengths;
    if (bonds.empty()) throw std::runtime_error("config: --bond-lengths required with --geometry");
    return molvqe::native_scan_points(opt.geometry, bonds, basis);
  }
  if (!opt.fixture_dir.empty()) {
    if (opt.molecule.empty())
      throw std::runtime_error("config: --molecule required with --fixture-dir");
    auto points = molvqe::fixture_scan_points(opt.fixture_dir, opt.molecule);
    if (!opt.bond_lengths.empty()) {
      std::vector<molvqe::ScanPoint> filtered;
      for (auto& p : points)
        for (double r : opt.bond_lengths)
          if (std::abs(p.bond_length - r) < 5e-5) filtered.push_back(std::move(p));
      if (filtered.empty()) throw std::runtime_error("config: no fixture matches --bond-lengths");
      points = std::move(filtered);
    }
    return points;
  }
  throw std::runtime_error("config: provide --geometry or --fixture-dir");
}

void print_point(const molvqe::PointReport& r) {
  std::printf("bond length        %.4f A\n", r.bond_length);
  std::printf("qubits             %d before reduction, %d after\n", r.n_qubits_before,
              r.n_qubits_after);
  std::printf("E_VQE              %.10f Hartree\n", r.e_vqe);
  std::printf("E_reference        %.10f Hartree\n", r.e_ref);
  std::printf("E_FCI              %.10f Hartree\n", r.e_fci);
  std::printf("|E_VQE - E_FCI|    %.3e Hartree\n", std::abs(r.err_vqe));
  std::printf("evaluations        %d\n", r.n_evaluations);
  std::printf("wall time          %.2f s\n", r.wall_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Molecular ground-state energies: VQE with UCCSD against FCI and mean-field"};
  app.set_config("--config");
  app.require_subcommand(1);

  CommonOptions opt;
  auto* single = app.add_subcommand("single-point", "One geometry: VQE, reference and FCI");
  add_common(single, opt);
  auto* scan = app.add_subcommand("scan", "Bond-length scan to CSV");
  add_common(scan, opt);
  auto* report = app.add_subcommand("report", "Accuracy summary from scan CSVs");
  std::vector<std::string> csvs;
  report->add_option("csv", csvs, "Scan CSV files (label taken from file stem)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    if (single->parsed()) {
      const auto points = resolve_points(opt);
      if (points.size() != 1)
        throw std::runtime_error("config: single-point needs exactly one geometry");
      const auto rep = molvqe::run_single_point(points[0].tensors, run_config(opt));
      molvqe::PointReport r = rep;
      r.bond_length = points[0].bond_length;
      print_point(r);
      return 0;
    }
    if (scan->parsed()) {
      molvqe::ScanConfig cfg;
      cfg.label = !opt.molecule.empty() ? opt.molecule : opt.geometry;
      cfg.points = resolve_points(opt);
      cfg.run = run_config(opt);
      const auto reports = molvqe::run_scan(cfg);
      const std::string csv = molvqe::scan_csv(reports);
      if (opt.output.empty())
        std::cout << csv;
      else
        molvqe::write_scan_csv(reports, opt.output);
      for (const auto& r : reports)
        if (!r.ok) {
          std::cerr << "point " << r.bond_length << " failed: " << r.error << "\n";
          return 1;
        }
      return 0;
    }
    if (report->parsed()) {
      std::vector<molvqe::AccuracySummary> rows;
      for (const auto& path : csvs) {
        std::string label = path;
        if (auto slash = label.find_last_of('/'); slash != std::string::npos)
          label = label.substr(slash + 1);
        if (auto dot = label.find('.'); dot != std::string::npos) label = label.substr(0, dot);
        rows.push_back(molvqe::summarize_csv(path, label));
      }
      std::cout << molvqe::render_report(rows);
      return 0;
    }
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.starts_with("config:") ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
