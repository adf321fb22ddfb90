// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver for the temperature-shift pipeline. Subcommands:
//   shift     temperature-dependent shift curves per observable
//   zpl       optical-line variant from ground/excited phonon spectra
//   oracle    brute-force occupation average (ground truth for `shift`)
//   levels    spin-Hamiltonian level structure and transitions
//   tensors   hyperfine / EFG / quadrupole / dipolar tensors from grids
//   spectral  curvature spectral densities, shift ratios, overlays
//   c13       13C hyperfine frequencies with equivalence grouping
//   fixtures  writes the synthetic input bundle
//
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 numeric error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/fixtures.hpp"
#include "spinshift/io.hpp"
#include "spinshift/oracle.hpp"
#include "spinshift/shift.hpp"
#include "spinshift/spectral.hpp"
#include "spinshift/spin.hpp"
#include "spinshift/tensor_calc.hpp"

namespace fs = std::filesystem;
using namespace spinshift;

namespace {

constexpr const char* kVersion = "spinshift 0.1.0";

struct CommonOptions {
  std::string out_dir = ".";
  int threads = 1;
  double omega_min_THz = default_omega_min_THz;
  std::string tgrid = "0:500:2";
};

void add_common(CLI::App* cmd, CommonOptions& common, bool with_tgrid = true) {
  cmd->add_option("--out-dir", common.out_dir, "Output directory");
  cmd->add_option("--threads", common.threads, "Worker threads for mode/voxel sums")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega-min", common.omega_min_THz,
                  "Soft-mode admission cutoff (linear THz)");
  if (with_tgrid)
    cmd->add_option("--tgrid", common.tgrid, "Temperature grid start:stop:step (K)");
  cmd->set_config("--config");
}

std::vector<double> parse_tgrid(const std::string& spec) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(ss >> std::ws).eof())
    throw ParseError("bad --tgrid '" + spec + "' (expected start:stop:step)");
  return temperature_grid(start, stop, step);
}

// LABEL=PATH, or bare PATH (label = file stem).
std::pair<std::string, fs::path> split_labeled(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) {
    const fs::path p(arg);
    return {p.stem().string(), p};
  }
  return {arg.substr(0, eq), fs::path(arg.substr(eq + 1))};
}

fs::path ensure_out_dir(const CommonOptions& common) {
  const fs::path dir(common.out_dir);
  fs::create_directories(dir);
  return dir;
}

double value_near(const std::vector<double>& grid, const std::vector<double>& values,
                  double target) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (std::abs(grid[i] - target) < std::abs(grid[best] - target)) best = i;
  return values[best];
}

// ---------------------------------------------------------------------------
// shift

struct ShiftArgs {
  CommonOptions common;
  std::string phonon;
  std::vector<std::string> curvatures;
  std::string lattice;
  std::vector<std::string> nu_of_a;
  int fit_degree = 1;
  double t_ref = 0.0;
  bool allow_extrapolation = false;
  bool absolute = false;
};

int run_shift(const ShiftArgs& args) {
  // Fail-fast: every referenced file is loaded and validated before any
  // computation or output happens.
  const PhononSpectrum spectrum = io::read_phonon_file(args.phonon);
  std::vector<CurvatureSet> sets;
  for (const auto& arg : args.curvatures) {
    const auto [label, path] = split_labeled(arg);
    sets.push_back(io::read_curvature_file(path, label));
  }

  std::map<std::string, std::vector<std::pair<double, double>>> nu_tables;
  for (const auto& arg : args.nu_of_a) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
      if (sets.size() != 1)
        throw ValidationError(
            "--nu-of-a needs LABEL=PATH form when several observables are given");
      nu_tables[sets.front().observable] = io::read_nu_of_a_file(arg);
    } else {
      nu_tables[arg.substr(0, eq)] = io::read_nu_of_a_file(arg.substr(eq + 1));
    }
  }
  std::optional<LatticeTable> lattice;
  if (!args.lattice.empty()) lattice = io::read_lattice_file(args.lattice);
  if (!nu_tables.empty() && !lattice)
    throw ValidationError("--nu-of-a requires --lattice");
  if (lattice && nu_tables.empty())
    throw ValidationError("--lattice requires at least one --nu-of-a table");
  for (const auto& [label, table] : nu_tables) {
    bool known = false;
    for (const auto& s : sets) known = known || s.observable == label;
    if (!known)
      throw ValidationError("--nu-of-a label '" + label +
                            "' matches no curvature observable");
  }

  const auto grid = parse_tgrid(args.common.tgrid);
  const fs::path out = ensure_out_dir(args.common);
  ShiftOptions options;
  options.omega_min_THz = args.common.omega_min_THz;
  options.threads = args.common.threads;
  options.subtract_zero_point = !args.absolute;
  ExpansionOptions exp_options{args.fit_degree, args.t_ref, args.allow_extrapolation};

  std::ofstream summary(out / "summary.txt", std::ios::binary);
  summary << kVersion << " shift summary\n";

  for (const auto& set : sets) {
    std::optional<ExpansionModel> expansion;
    if (auto it = nu_tables.find(set.observable); it != nu_tables.end())
      expansion.emplace(*lattice, it->second, exp_options);
    const ShiftCurve curve = total_shift_curve(
        spectrum, set, expansion ? &*expansion : nullptr, grid, options);
    const fs::path csv = out / ("shift_" + set.observable + ".csv");
    io::write_shift_curve_csv(csv, curve);

    summary << "observable " << set.observable << ": modes "
            << spectrum.modes.size() - static_cast<std::size_t>(curve.excluded_modes)
            << " admitted, " << curve.excluded_modes << " excluded\n";
    if (!curve.derivative.empty())
      summary << "  dnu/dT near 300 K: "
              << io::format_float(value_near(grid, curve.derivative, 300.0))
              << " kHz/K\n";
    summary << "  dnu(" << io::format_float(grid.back())
            << " K): " << io::format_float(curve.total.back()) << " MHz\n";
    std::cout << "wrote " << csv.string() << "\n";
  }
  std::cout << "wrote " << (out / "summary.txt").string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// zpl

struct ZplArgs {
  CommonOptions common;
  std::string ground;
  std::string excited;
  std::string lattice;
  std::string nu_of_a;
  int fit_degree = 1;
  double t_ref = 0.0;
  bool allow_extrapolation = false;
  bool absolute = false;
};

int run_zpl(const ZplArgs& args) {
  const PhononSpectrum ground = io::read_phonon_file(args.ground);
  const PhononSpectrum excited = io::read_phonon_file(args.excited);
  std::optional<LatticeTable> lattice;
  if (!args.lattice.empty()) lattice = io::read_lattice_file(args.lattice);
  std::optional<std::vector<std::pair<double, double>>> nu_table;
  if (!args.nu_of_a.empty()) nu_table = io::read_nu_of_a_file(args.nu_of_a);
  if (nu_table.has_value() != lattice.has_value())
    throw ValidationError("zpl expansion needs both --lattice and --nu-of-a");

  const auto grid = parse_tgrid(args.common.tgrid);
  ShiftOptions options;
  options.omega_min_THz = args.common.omega_min_THz;
  options.threads = args.common.threads;
  options.subtract_zero_point = !args.absolute;

  std::optional<ExpansionModel> expansion;
  if (lattice)
    expansion.emplace(*lattice, *nu_table,
                      ExpansionOptions{args.fit_degree, args.t_ref,
                                       args.allow_extrapolation});

  const ShiftCurve curve =
      zpl_shift(ground, excited, expansion ? &*expansion : nullptr, grid, options);
  const fs::path out = ensure_out_dir(args.common);
  io::write_shift_curve_csv(out / "shift_ZPL.csv", curve);
  std::cout << "wrote " << (out / "shift_ZPL.csv").string() << " ("
            << curve.excluded_modes << " mode pairs excluded)\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle(const std::string& input_path, int n_max_override) {
  const io::OracleInput input = io::read_oracle_file(input_path);
  OccupationEnsemble ensemble;
  ensemble.temperature_K = input.temperature_K;
  for (const auto& [freq_THz, dnu] : input.modes) {
    const double omega = freq_THz * units::THz_to_rad_per_s;
    ensemble.modes.push_back({omega, dnu});
    int n_max = n_max_override > 0 ? n_max_override : input.n_max;
    if (n_max <= 0) n_max = default_n_max(omega, input.temperature_K);
    ensemble.n_max.push_back(n_max);
  }
  const OracleResult result = oracle_average(ensemble, input.nu0_MHz);
  std::cout << "average_MHz " << io::format_float(result.average_MHz) << "\n"
            << "tail_bound_MHz " << io::format_float(result.tail_bound_MHz) << "\n"
            << "configurations " << result.configurations << "\n";
  for (std::size_t i = 0; i < result.per_mode_tail_weight.size(); ++i)
    std::cout << "mode_tail_weight " << i + 1 << " "
              << io::format_float(result.per_mode_tail_weight[i]) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// levels

struct LevelsArgs {
  CommonOptions common;
  std::string system;
  std::vector<double> reduced; // D Q Azz
  std::string from, to;
};

int run_levels(const LevelsArgs& args) {
  LevelSet levels;
  if (!args.system.empty()) {
    const SpinSystem system = io::read_system_file(args.system);
    levels = diagonalize(system);
  } else if (args.reduced.size() == 3) {
    levels = build_reduced(args.reduced[0], args.reduced[1], args.reduced[2]);
  } else {
    throw ValidationError("levels: give --system FILE or --reduced D Q AZZ");
  }
  const fs::path out = ensure_out_dir(args.common);
  io::write_levels_csv(out / "levels.csv", levels);
  std::cout << "wrote " << (out / "levels.csv").string() << " ("
            << levels.energies.size() << " levels)\n";
  if (!args.from.empty() || !args.to.empty()) {
    if (args.from.empty() || args.to.empty())
      throw ValidationError("levels: --from and --to must be given together");
    std::cout << "transition " << args.from << " -> " << args.to << ": "
              << io::format_float(transition_frequency(levels, args.from, args.to))
              << " MHz\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// tensors

struct TensorsArgs {
  CommonOptions common;
  std::vector<std::string> convert_cube; // IN OUT
  std::string spin_density;
  std::string charge_density;
  std::string nuclei;
  std::string efg_target;
  double sz = 1.0;
  double r_c = 0.05;
  std::string dipolar_a, dipolar_b;
  int chi = 1;
};

int run_tensors(const TensorsArgs& args) {
  const fs::path out = ensure_out_dir(args.common);
  bool did_something = false;

  if (!args.convert_cube.empty()) {
    if (args.convert_cube.size() != 2)
      throw ValidationError("--convert-cube needs IN and OUT paths");
    std::vector<NucleusSpec> atoms;
    const ScalarField field = io::read_cube_file(args.convert_cube[0], &atoms);
    io::write_grid_file(args.convert_cube[1], field);
    std::cout << "wrote " << args.convert_cube[1] << " (" << field.size()
              << " values, " << atoms.size() << " atoms)\n";
    did_something = true;
  }

  QuadratureOptions quad{args.r_c, args.common.threads};

  if (!args.spin_density.empty()) {
    if (args.nuclei.empty())
      throw ValidationError("--spin-density requires --nuclei");
    const ScalarField rho_s = io::read_grid_file(args.spin_density);
    const auto nuclei = io::read_nuclei_file(args.nuclei);
    for (const auto& nucleus : nuclei) {
      const double contact = fermi_contact(rho_s, nucleus, args.sz);
      InteractionTensor a;
      a.kind = TensorKind::A;
      a.matrix = hyperfine_tensor(rho_s, nucleus, args.sz, quad);
      const fs::path path = out / (nucleus.name + "_A.tensor");
      io::write_tensor_file(path, a);
      std::cout << nucleus.name << ": fermi_contact "
                << io::format_float(contact) << " MHz, wrote " << path.string()
                << "\n";
    }
    did_something = true;
  }

  if (!args.charge_density.empty()) {
    if (args.nuclei.empty() || args.efg_target.empty())
      throw ValidationError("--charge-density requires --nuclei and --efg-target");
    const ScalarField rho = io::read_grid_file(args.charge_density);
    const auto nuclei = io::read_nuclei_file(args.nuclei);
    const NucleusSpec* target = nullptr;
    for (const auto& n : nuclei)
      if (n.name == args.efg_target) target = &n;
    if (!target)
      throw ValidationError("EFG target '" + args.efg_target +
                            "' not present in the nuclei file");

    InteractionTensor efg;
    efg.kind = TensorKind::EFG;
    efg.matrix = efg_tensor(rho, nuclei, *target, quad);
    const Eigen::Vector3d pas = efg_pas_eigenvalues(efg.matrix);
    io::write_tensor_file(out / (target->name + "_EFG.tensor"), efg);
    std::cout << target->name << ": EFG PAS (V/A^2) " << io::format_float(pas(0))
              << " " << io::format_float(pas(1)) << " " << io::format_float(pas(2))
              << "\n";
    if (target->I >= 1.0) {
      InteractionTensor q;
      q.kind = TensorKind::Q;
      q.matrix = q_matrix(pas, *target);
      io::write_tensor_file(out / (target->name + "_Q.tensor"), q);
      std::cout << target->name << ": Q splitting "
                << io::format_float(1.5 * q.matrix(2, 2)) << " MHz\n";
    }
    did_something = true;
  }

  if (!args.dipolar_a.empty() || !args.dipolar_b.empty()) {
    if (args.dipolar_a.empty() || args.dipolar_b.empty())
      throw ValidationError("--dipolar-a and --dipolar-b must be given together");
    const ScalarField rho_a = io::read_grid_file(args.dipolar_a);
    const ScalarField rho_b = io::read_grid_file(args.dipolar_b);
    InteractionTensor d;
    d.kind = TensorKind::D;
    d.matrix = dipolar_coupling_direct(rho_a, rho_b, args.chi, quad);
    io::write_tensor_file(out / "dipolar_direct.tensor", d);
    std::cout << "wrote " << (out / "dipolar_direct.tensor").string() << "\n";
    did_something = true;
  }

  if (!did_something)
    throw ValidationError(
        "tensors: nothing to do (give --spin-density, --charge-density, "
        "--dipolar-a/--dipolar-b or --convert-cube)");
  return 0;
}

// ---------------------------------------------------------------------------
// spectral

struct SpectralArgs {
  CommonOptions common;
  std::string phonon;
  std::vector<std::string> curvatures;
  int bins = 200;
  std::string ratio; // "L1/L2"
  double zeta = 0.0;
  std::string overlay_ref;
};

int run_spectral(const SpectralArgs& args) {
  const PhononSpectrum spectrum = io::read_phonon_file(args.phonon);
  std::vector<CurvatureSet> sets;
  for (const auto& arg : args.curvatures) {
    const auto [label, path] = split_labeled(arg);
    sets.push_back(io::read_curvature_file(path, label));
  }
  const auto edges = default_bins(spectrum, args.bins, args.common.omega_min_THz);

  std::map<std::string, SpectralDensity> densities;
  const fs::path out = ensure_out_dir(args.common);
  for (const auto& set : sets) {
    const SpectralDensity density =
        spectral_density(spectrum, set, edges, args.common.omega_min_THz);
    io::write_spectral_csv(out / ("spectral_" + set.observable + ".csv"), density);
    std::cout << "wrote " << (out / ("spectral_" + set.observable + ".csv")).string()
              << "\n";
    densities.emplace(set.observable, density);
  }

  if (!args.ratio.empty()) {
    const auto slash = args.ratio.find('/');
    if (slash == std::string::npos)
      throw ValidationError("--ratio must look like LABEL1/LABEL2");
    const std::string l1 = args.ratio.substr(0, slash);
    const std::string l2 = args.ratio.substr(slash + 1);
    if (!densities.count(l1) || !densities.count(l2))
      throw ValidationError("--ratio labels must match loaded curvature observables");
    // T = 0 has no dynamic shift when zeta = 0; pick the grid accordingly.
    const auto grid = parse_tgrid(args.common.tgrid);
    std::vector<double> ratios;
    ratios.reserve(grid.size());
    for (double T : grid)
      ratios.push_back(shift_ratio(densities.at(l1), densities.at(l2), T, args.zeta));
    const fs::path path = out / ("ratio_" + l1 + "_" + l2 + ".csv");
    io::write_ratio_csv(path, grid, ratios, l1 + "_over_" + l2);
    std::cout << "wrote " << path.string() << "\n";
  }

  if (!args.overlay_ref.empty()) {
    if (sets.size() < 2)
      throw ValidationError("--overlay-ref needs at least two curvature sets");
    const auto grid = parse_tgrid(args.common.tgrid);
    ShiftOptions options;
    options.omega_min_THz = args.common.omega_min_THz;
    options.threads = args.common.threads;
    std::vector<ShiftCurve> curves;
    std::size_t ref_index = sets.size();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      curves.push_back(total_shift_curve(spectrum, sets[i], nullptr, grid, options));
      if (sets[i].observable == args.overlay_ref) ref_index = i;
    }
    if (ref_index == sets.size())
      throw ValidationError("--overlay-ref matches no curvature observable");
    for (const auto& table : correlation_overlay(curves, ref_index)) {
      const fs::path path =
          out / ("overlay_" + table.reference + "_" + table.observable + ".csv");
      io::write_overlay_csv(path, table);
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// c13

struct C13Args {
  CommonOptions common;
  std::string sites;
  double tol = 1e-3;
  std::vector<double> axis = {0.0, 0.0, 1.0};
};

int run_c13(const C13Args& args) {
  const auto sites = io::read_sites_file(args.sites);
  if (args.axis.size() != 3)
    throw ValidationError("--axis needs three components");
  Eigen::Vector3d axis(args.axis[0], args.axis[1], args.axis[2]);
  const double norm = axis.norm();
  if (norm < 1e-12) throw ValidationError("--axis must be nonzero");
  axis /= norm;

  std::vector<std::pair<int, double>> frequencies;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    frequencies.emplace_back(static_cast<int>(i),
                             c13_hyperfine_frequency(sites[i].tensor, axis));
    names.push_back(sites[i].id);
  }
  const auto groups = group_equivalent_nuclei(frequencies, args.tol);
  const fs::path out = ensure_out_dir(args.common);
  io::write_groups_csv(out / "c13_groups.csv", groups, names);
  std::cout << "wrote " << (out / "c13_groups.csv").string() << "\n";
  for (std::size_t g = 0; g < groups.size(); ++g)
    std::cout << "group " << g + 1 << ": nu_A "
              << io::format_float(groups[g].mean_frequency_MHz) << " MHz, "
              << groups[g].site_ids.size() << " site(s)\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinshift: temperature-dependent transition frequencies of spin defects"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ShiftArgs shift_args;
  auto* shift_cmd = app.add_subcommand("shift", "Temperature shift curves");
  add_common(shift_cmd, shift_args.common);
  shift_cmd->add_option("--phonon", shift_args.phonon, "Phonon spectrum file")->required();
  shift_cmd->add_option("--curvature", shift_args.curvatures,
                        "Curvature file, LABEL=PATH or PATH (repeatable)")
      ->required();
  shift_cmd->add_option("--lattice", shift_args.lattice, "Lattice a(T) table");
  shift_cmd->add_option("--nu-of-a", shift_args.nu_of_a,
                        "nu(a) samples, LABEL=PATH (repeatable)");
  shift_cmd->add_option("--fit-degree", shift_args.fit_degree, "nu(a) fit degree")
      ->check(CLI::Range(1, 2));
  shift_cmd->add_option("--tref", shift_args.t_ref, "Expansion reference temperature (K)");
  shift_cmd->add_flag("--allow-extrapolation", shift_args.allow_extrapolation,
                      "Allow T outside the lattice table");
  shift_cmd->add_flag("--absolute", shift_args.absolute,
                      "Keep the zero-point dynamic term (no T = 0 referencing)");

  ZplArgs zpl_args;
  auto* zpl_cmd = app.add_subcommand("zpl", "Zero-phonon-line shift");
  add_common(zpl_cmd, zpl_args.common);
  zpl_cmd->add_option("--ground", zpl_args.ground, "Ground-state phonon file")->required();
  zpl_cmd->add_option("--excited", zpl_args.excited, "Excited-state phonon file")
      ->required();
  zpl_cmd->add_option("--lattice", zpl_args.lattice, "Lattice a(T) table");
  zpl_cmd->add_option("--nu-of-a", zpl_args.nu_of_a, "nu0(a) samples");
  zpl_cmd->add_option("--fit-degree", zpl_args.fit_degree, "nu(a) fit degree")
      ->check(CLI::Range(1, 2));
  zpl_cmd->add_option("--tref", zpl_args.t_ref, "Expansion reference temperature (K)");
  zpl_cmd->add_flag("--allow-extrapolation", zpl_args.allow_extrapolation,
                    "Allow T outside the lattice table");
  zpl_cmd->add_flag("--absolute", zpl_args.absolute,
                    "Keep the zero-point dynamic term");

  std::string oracle_input;
  int oracle_n_max = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force occupation average");
  oracle_cmd->add_option("--input", oracle_input, "Oracle input file")->required();
  oracle_cmd->add_option("--n-max", oracle_n_max, "Override the occupation cutoff");
  oracle_cmd->set_config("--config");

  LevelsArgs levels_args;
  auto* levels_cmd = app.add_subcommand("levels", "Spin-Hamiltonian level structure");
  add_common(levels_cmd, levels_args.common, /*with_tgrid=*/false);
  levels_cmd->add_option("--system", levels_args.system, "Spin system file");
  levels_cmd->add_option("--reduced", levels_args.reduced,
                         "Reduced model D Q AZZ (MHz)")
      ->expected(3);
  levels_cmd->add_option("--from", levels_args.from, "Transition source label");
  levels_cmd->add_option("--to", levels_args.to, "Transition target label");

  TensorsArgs tensors_args;
  auto* tensors_cmd = app.add_subcommand("tensors", "Interaction tensors from grids");
  add_common(tensors_cmd, tensors_args.common, /*with_tgrid=*/false);
  tensors_cmd->add_option("--convert-cube", tensors_args.convert_cube,
                          "Convert a cube-style volumetric file: IN OUT")
      ->expected(2);
  tensors_cmd->add_option("--spin-density", tensors_args.spin_density,
                          "Spin density grid (mu_B/A^3)");
  tensors_cmd->add_option("--charge-density", tensors_args.charge_density,
                          "Charge density grid (e/A^3)");
  tensors_cmd->add_option("--nuclei", tensors_args.nuclei, "Nuclei list file");
  tensors_cmd->add_option("--efg-target", tensors_args.efg_target,
                          "Nucleus name for the EFG/Q evaluation");
  tensors_cmd->add_option("--sz", tensors_args.sz, "<S_z> of the reference state");
  tensors_cmd->add_option("--rc", tensors_args.r_c, "On-site exclusion radius (A)");
  tensors_cmd->add_option("--dipolar-a", tensors_args.dipolar_a,
                          "First density for the direct dipolar term");
  tensors_cmd->add_option("--dipolar-b", tensors_args.dipolar_b,
                          "Second density for the direct dipolar term");
  tensors_cmd->add_option("--chi", tensors_args.chi, "Pair spin sign, +1 or -1")
      ->check(CLI::IsMember({-1, 1}));

  SpectralArgs spectral_args;
  spectral_args.common.tgrid = "10:500:10";
  auto* spectral_cmd =
      app.add_subcommand("spectral", "Curvature spectral density and ratios");
  add_common(spectral_cmd, spectral_args.common);
  spectral_cmd->add_option("--phonon", spectral_args.phonon, "Phonon spectrum file")
      ->required();
  spectral_cmd->add_option("--curvature", spectral_args.curvatures,
                           "Curvature file, LABEL=PATH (repeatable)")
      ->required();
  spectral_cmd->add_option("--bins", spectral_args.bins, "Histogram bin count")
      ->check(CLI::PositiveNumber);
  spectral_cmd->add_option("--ratio", spectral_args.ratio,
                           "Shift ratio LABEL1/LABEL2 over the T grid");
  spectral_cmd->add_option("--zeta", spectral_args.zeta,
                           "Occupation weight offset (0 or 0.5)")
      ->check(CLI::IsMember({0.0, 0.5}));
  spectral_cmd->add_option("--overlay-ref", spectral_args.overlay_ref,
                           "Reference observable for correlation overlays");

  C13Args c13_args;
  auto* c13_cmd = app.add_subcommand("c13", "13C hyperfine frequencies and groups");
  add_common(c13_cmd, c13_args.common, /*with_tgrid=*/false);
  c13_cmd->add_option("--sites", c13_args.sites, "Site tensor file")->required();
  c13_cmd->add_option("--tol", c13_args.tol, "Relative grouping tolerance")
      ->check(CLI::PositiveNumber);
  c13_cmd->add_option("--axis", c13_args.axis, "Quantization axis x y z")->expected(3);

  CommonOptions fixtures_common;
  fixtures_common.out_dir = "fixtures";
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the synthetic input bundle");
  add_common(fixtures_cmd, fixtures_common, /*with_tgrid=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (shift_cmd->parsed()) return run_shift(shift_args);
    if (zpl_cmd->parsed()) return run_zpl(zpl_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_input, oracle_n_max);
    if (levels_cmd->parsed()) return run_levels(levels_args);
    if (tensors_cmd->parsed()) return run_tensors(tensors_args);
    if (spectral_cmd->parsed()) return run_spectral(spectral_args);
    if (c13_cmd->parsed()) return run_c13(c13_args);
    if (fixtures_cmd->parsed()) {
      const auto files = fixtures::write_bundle(fixtures_common.out_dir);
      for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
