// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations. Arrays cross the boundary as
// numpy via pybind11's Eigen support; file readers are exposed so python
// drivers can consume the same inputs as the CLI.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"
#include "spinshift/fixtures.hpp"
#include "spinshift/io.hpp"
#include "spinshift/oracle.hpp"
#include "spinshift/shift.hpp"
#include "spinshift/spectral.hpp"
#include "spinshift/spin.hpp"
#include "spinshift/tensor_calc.hpp"

namespace py = pybind11;
using namespace spinshift;

namespace {

ShiftOptions make_options(double omega_min_THz, bool subtract_zero_point, int threads) {
  return ShiftOptions{omega_min_THz, subtract_zero_point, threads};
}

ScalarField field_from_numpy(const Eigen::Vector3d& origin,
                             const Eigen::Matrix3d& spacing_rows,
                             py::array_t<double, py::array::c_style | py::array::forcecast> values) {
  if (values.ndim() != 3)
    throw ValidationError("ScalarField: values must be a 3-d array (nx, ny, nz)");
  ScalarField field;
  field.origin = origin;
  for (int d = 0; d < 3; ++d) field.spacing[static_cast<std::size_t>(d)] = spacing_rows.row(d);
  field.dims = {static_cast<int>(values.shape(0)), static_cast<int>(values.shape(1)),
                static_cast<int>(values.shape(2))};
  field.values.resize(field.size());
  auto v = values.unchecked<3>();
  for (int k = 0; k < field.dims[2]; ++k)
    for (int j = 0; j < field.dims[1]; ++j)
      for (int i = 0; i < field.dims[0]; ++i)
        field.values[field.index(i, j, k)] = v(i, j, k);
  return field;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Temperature-dependent transition frequencies of spin defects";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  auto constants_mod = m.def_submodule("constants");
  constants_mod.attr("hbar_eV_s") = constants::hbar_eV_s;
  constants_mod.attr("hbar_J_s") = constants::hbar_J_s;
  constants_mod.attr("planck_J_s") = constants::planck_J_s;
  constants_mod.attr("boltzmann_eV_per_K") = constants::boltzmann_eV_per_K;
  constants_mod.attr("mu_0") = constants::mu_0;
  constants_mod.attr("mu_B") = constants::mu_B;
  constants_mod.attr("mu_N") = constants::mu_N;
  constants_mod.attr("g_e") = constants::g_e;
  constants_mod.attr("elementary_charge") = constants::elementary_charge;
  constants_mod.attr("eps_0") = constants::eps_0;
  constants_mod.attr("amu_kg") = constants::amu_kg;

  // --- phonons ---------------------------------------------------------------
  py::class_<PhononMode>(m, "PhononMode")
      .def(py::init([](int index, double freq_THz, double mass_amu) {
             return PhononMode{index, freq_THz * units::THz_to_rad_per_s, mass_amu,
                               std::nullopt};
           }),
           py::arg("index"), py::arg("freq_THz"), py::arg("mass_amu"))
      .def_readonly("index", &PhononMode::index)
      .def_readonly("omega", &PhononMode::omega)
      .def_readonly("effective_mass", &PhononMode::effective_mass)
      .def_property_readonly("freq_THz", [](const PhononMode& mode) {
        return mode.omega * units::rad_per_s_to_THz;
      });

  py::class_<PhononSpectrum>(m, "PhononSpectrum")
      .def(py::init([](std::vector<PhononMode> modes, std::string label) {
             return PhononSpectrum{std::move(modes), std::move(label)};
           }),
           py::arg("modes"), py::arg("label") = "")
      .def_readonly("modes", &PhononSpectrum::modes)
      .def_readonly("label", &PhononSpectrum::label);

  m.def("bose_occupation", &bose_occupation, py::arg("omega_rad_s"), py::arg("T_K"));
  m.def("mean_square_displacement", &mean_square_displacement, py::arg("mode"),
        py::arg("T_K"));
  m.def("zero_point_msd", &zero_point_msd, py::arg("mode"));

  // --- curvatures and shifts ---------------------------------------------------
  py::class_<CurvatureSample>(m, "CurvatureSample")
      .def(py::init([](int mode_index, double delta_q, double nu_plus, double nu_minus,
                       double nu_zero) {
             return CurvatureSample{mode_index, delta_q, nu_plus, nu_minus, nu_zero};
           }),
           py::arg("mode_index"), py::arg("delta_q"), py::arg("nu_plus"),
           py::arg("nu_minus"), py::arg("nu_zero"))
      .def_readonly("mode_index", &CurvatureSample::mode_index)
      .def_readonly("delta_q", &CurvatureSample::delta_q);

  py::class_<CurvatureSet>(m, "CurvatureSet")
      .def(py::init([](std::string observable, std::vector<CurvatureSample> samples) {
             CurvatureSet set{std::move(observable), std::move(samples)};
             set.validate();
             return set;
           }),
           py::arg("observable"), py::arg("samples"))
      .def_readonly("observable", &CurvatureSet::observable)
      .def_readonly("samples", &CurvatureSet::samples)
      .def("second_derivatives", &CurvatureSet::second_derivatives);

  m.def("second_derivative", &second_derivative, py::arg("sample"));
  m.def("modal_frequency_shift", &modal_frequency_shift, py::arg("mode"),
        py::arg("d2nu_MHz_per_A2"), py::arg("omega_min_THz") = default_omega_min_THz);
  m.def(
      "dynamic_shift",
      [](const PhononSpectrum& spectrum, const CurvatureSet& curvatures, double T,
         double omega_min_THz, bool subtract_zero_point, int threads) {
        return dynamic_shift(spectrum, curvatures, T,
                             make_options(omega_min_THz, subtract_zero_point, threads));
      },
      py::arg("spectrum"), py::arg("curvatures"), py::arg("T_K"),
      py::arg("omega_min_THz") = default_omega_min_THz,
      py::arg("subtract_zero_point") = true, py::arg("threads") = 1);

  py::class_<LatticeTable>(m, "LatticeTable")
      .def(py::init([](std::vector<double> T, std::vector<double> a) {
             LatticeTable t{std::move(T), std::move(a)};
             t.validate();
             return t;
           }),
           py::arg("T_K"), py::arg("a_A"))
      .def_readonly("T_K", &LatticeTable::temperature)
      .def_readonly("a_A", &LatticeTable::lattice_parameter);

  m.def(
      "expansion_shift",
      [](const LatticeTable& table, const std::vector<std::pair<double, double>>& nu_of_a,
         double T, int fit_degree, double T_ref, bool allow_extrapolation) {
        return expansion_shift(table, nu_of_a, T,
                               ExpansionOptions{fit_degree, T_ref, allow_extrapolation});
      },
      py::arg("lattice"), py::arg("nu_of_a"), py::arg("T_K"), py::arg("fit_degree") = 1,
      py::arg("T_ref") = 0.0, py::arg("allow_extrapolation") = false);

  py::class_<ShiftCurve>(m, "ShiftCurve")
      .def_readonly("observable", &ShiftCurve::observable)
      .def_readonly("temperatures", &ShiftCurve::temperatures)
      .def_readonly("total", &ShiftCurve::total)
      .def_readonly("expansion_term", &ShiftCurve::expansion_term)
      .def_readonly("dynamic_term", &ShiftCurve::dynamic_term)
      .def_readonly("derivative", &ShiftCurve::derivative)
      .def_readonly("excluded_modes", &ShiftCurve::excluded_modes);

  m.def(
      "total_shift_curve",
      [](const PhononSpectrum& spectrum, const CurvatureSet& curvatures,
         const std::optional<LatticeTable>& lattice,
         const std::optional<std::vector<std::pair<double, double>>>& nu_of_a,
         const std::vector<double>& temperatures, double omega_min_THz,
         bool subtract_zero_point, int threads, int fit_degree, double T_ref) {
        std::optional<ExpansionModel> expansion;
        if (lattice && nu_of_a)
          expansion.emplace(*lattice, *nu_of_a, ExpansionOptions{fit_degree, T_ref, false});
        else if (lattice || nu_of_a)
          throw ValidationError("lattice and nu_of_a must be given together");
        return total_shift_curve(spectrum, curvatures, expansion ? &*expansion : nullptr,
                                 temperatures,
                                 make_options(omega_min_THz, subtract_zero_point, threads));
      },
      py::arg("spectrum"), py::arg("curvatures"), py::arg("lattice") = std::nullopt,
      py::arg("nu_of_a") = std::nullopt,
      py::arg("temperatures") = temperature_grid(0.0, 500.0, 2.0),
      py::arg("omega_min_THz") = default_omega_min_THz,
      py::arg("subtract_zero_point") = true, py::arg("threads") = 1,
      py::arg("fit_degree") = 1, py::arg("T_ref") = 0.0);

  m.def(
      "zpl_shift",
      [](const PhononSpectrum& ground, const PhononSpectrum& excited,
         const std::vector<double>& temperatures, double omega_min_THz,
         bool subtract_zero_point, int threads) {
        return zpl_shift(ground, excited, nullptr, temperatures,
                         make_options(omega_min_THz, subtract_zero_point, threads));
      },
      py::arg("ground"), py::arg("excited"),
      py::arg("temperatures") = temperature_grid(0.0, 500.0, 2.0),
      py::arg("omega_min_THz") = default_omega_min_THz,
      py::arg("subtract_zero_point") = true, py::arg("threads") = 1);

  m.def("temperature_grid", &temperature_grid, py::arg("start"), py::arg("stop"),
        py::arg("step"));

  // --- oracle -------------------------------------------------------------------
  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("average_MHz", &OracleResult::average_MHz)
      .def_readonly("tail_bound_MHz", &OracleResult::tail_bound_MHz)
      .def_readonly("configurations", &OracleResult::configurations)
      .def_readonly("per_mode_tail_weight", &OracleResult::per_mode_tail_weight);

  m.def(
      "oracle_average",
      [](const std::vector<std::pair<double, double>>& modes, double T, double nu0,
         int n_max) {
        OccupationEnsemble ensemble;
        ensemble.temperature_K = T;
        for (const auto& [freq_THz, dnu] : modes) {
          const double omega = freq_THz * units::THz_to_rad_per_s;
          ensemble.modes.push_back({omega, dnu});
          ensemble.n_max.push_back(n_max > 0 ? n_max : default_n_max(omega, T));
        }
        return oracle_average(ensemble, nu0);
      },
      py::arg("modes"), py::arg("T_K"), py::arg("nu0_MHz") = 0.0, py::arg("n_max") = 0,
      "modes: list of (freq_THz, dnu_MHz) pairs");

  // --- spin Hamiltonian -----------------------------------------------------------
  m.def(
      "spin_operators",
      [](double j) {
        const SpinOperators ops = spin_operators(j);
        return py::make_tuple(ops.jx, ops.jy, ops.jz, ops.jplus, ops.jminus);
      },
      py::arg("j"), "Returns (jx, jy, jz, j_plus, j_minus)");

  py::enum_<TensorKind>(m, "TensorKind")
      .value("D", TensorKind::D)
      .value("A", TensorKind::A)
      .value("Q", TensorKind::Q)
      .value("EFG", TensorKind::EFG);

  py::class_<InteractionTensor>(m, "InteractionTensor")
      .def(py::init([](const Eigen::Matrix3d& matrix, TensorKind kind) {
             InteractionTensor t{matrix, kind, TensorFrame::Lab};
             t.validate();
             return t;
           }),
           py::arg("matrix"), py::arg("kind"))
      .def_readonly("matrix", &InteractionTensor::matrix)
      .def_readonly("kind", &InteractionTensor::kind);

  py::class_<NuclearSpin>(m, "NuclearSpin")
      .def(py::init([](double I, const InteractionTensor& A,
                       std::optional<InteractionTensor> Q, std::string name) {
             return NuclearSpin{I, A, std::move(Q), std::move(name)};
           }),
           py::arg("I"), py::arg("A"), py::arg("Q") = std::nullopt, py::arg("name") = "")
      .def_readonly("I", &NuclearSpin::I);

  py::class_<SpinSystem>(m, "SpinSystem")
      .def(py::init([](double S, const InteractionTensor& D,
                       std::vector<NuclearSpin> nuclei, const Eigen::Vector3d& axis) {
             SpinSystem sys{S, D, std::move(nuclei), axis};
             sys.validate();
             return sys;
           }),
           py::arg("S"), py::arg("D"), py::arg("nuclei") = std::vector<NuclearSpin>{},
           py::arg("quantization_axis") = Eigen::Vector3d::UnitZ().eval())
      .def_readonly("S", &SpinSystem::S)
      .def("dimension", &SpinSystem::dimension);

  m.def("build_full_hamiltonian", &build_full_hamiltonian, py::arg("system"),
        py::arg("dimension_limit") = default_dimension_limit);

  py::class_<LevelSet>(m, "LevelSet")
      .def_readonly("energies", &LevelSet::energies)
      .def_readonly("labels", &LevelSet::labels)
      .def_readonly("dominant_weight", &LevelSet::dominant_weight)
      .def_readonly("basis", &LevelSet::basis);

  m.def("diagonalize", &diagonalize, py::arg("system"),
        py::arg("dimension_limit") = default_dimension_limit);
  m.def("build_reduced", &build_reduced, py::arg("D_MHz"), py::arg("Q_MHz"),
        py::arg("A_zz_MHz"));
  m.def("transition_frequency", &transition_frequency, py::arg("levels"),
        py::arg("from_label"), py::arg("to_label"));

  py::class_<AxialForm>(m, "AxialForm")
      .def_readonly("splitting", &AxialForm::splitting)
      .def_readonly("asymmetry", &AxialForm::asymmetry)
      .def_readonly("pas_values", &AxialForm::pas_values)
      .def_readonly("axes", &AxialForm::axes);

  m.def("principal_axis_form", &principal_axis_form, py::arg("tensor"),
        py::arg("quantization_axis") = Eigen::Vector3d::UnitZ().eval());

  py::class_<PrincipalAxisForms>(m, "PrincipalAxisForms")
      .def_readonly("D", &PrincipalAxisForms::D)
      .def_readonly("epsilon", &PrincipalAxisForms::epsilon)
      .def_readonly("Q", &PrincipalAxisForms::Q)
      .def_readonly("eta", &PrincipalAxisForms::eta);

  m.def("principal_axis_forms", &principal_axis_forms, py::arg("D_tensor"),
        py::arg("Q_tensor"), py::arg("quantization_axis") = Eigen::Vector3d::UnitZ().eval());

  m.def("c13_hyperfine_frequency", &c13_hyperfine_frequency, py::arg("A_MHz"),
        py::arg("axis") = Eigen::Vector3d::UnitZ().eval());

  py::class_<NucleusGroup>(m, "NucleusGroup")
      .def_readonly("site_ids", &NucleusGroup::site_ids)
      .def_readonly("mean_frequency_MHz", &NucleusGroup::mean_frequency_MHz);

  m.def("group_equivalent_nuclei", &group_equivalent_nuclei,
        py::arg("site_frequencies"), py::arg("tol"));

  // --- density grids and tensor evaluation -----------------------------------------
  py::class_<ScalarField>(m, "ScalarField")
      .def(py::init(&field_from_numpy), py::arg("origin"), py::arg("spacing_rows"),
           py::arg("values"),
           "spacing_rows: 3x3 matrix whose rows are the grid step vectors")
      .def_readonly("origin", &ScalarField::origin)
      .def_readonly("dims", &ScalarField::dims)
      .def("voxel_volume", &ScalarField::voxel_volume)
      .def("interpolate", &ScalarField::interpolate, py::arg("r"));

  py::class_<NucleusSpec>(m, "NucleusSpec")
      .def(py::init([](std::string name, const Eigen::Vector3d& position,
                       double g_MHz_per_T, double Q_emb, int Z, double I) {
             return NucleusSpec{std::move(name), position, g_MHz_per_T, Q_emb, Z, I};
           }),
           py::arg("name"), py::arg("position"), py::arg("g_MHz_per_T"),
           py::arg("Q_emb") = 0.0, py::arg("Z") = 1, py::arg("I") = 0.5)
      .def_readonly("name", &NucleusSpec::name)
      .def_readonly("position", &NucleusSpec::position);

  m.def("nucleus_n14", &nucleus_n14, py::arg("position"));
  m.def("nucleus_c13", &nucleus_c13, py::arg("position"));

  m.def(
      "fermi_contact",
      [](const ScalarField& rho_s, const NucleusSpec& nucleus, double Sz) {
        return fermi_contact(rho_s, nucleus, Sz);
      },
      py::arg("rho_s"), py::arg("nucleus"), py::arg("Sz_expect"));
  m.def(
      "dipolar_hyperfine",
      [](const ScalarField& rho_s, const NucleusSpec& nucleus, double Sz, double r_c,
         int threads) {
        return dipolar_hyperfine(rho_s, nucleus, Sz, QuadratureOptions{r_c, threads});
      },
      py::arg("rho_s"), py::arg("nucleus"), py::arg("Sz_expect"), py::arg("r_c") = 0.05,
      py::arg("threads") = 1);
  m.def(
      "hyperfine_tensor",
      [](const ScalarField& rho_s, const NucleusSpec& nucleus, double Sz, double r_c,
         int threads) {
        return hyperfine_tensor(rho_s, nucleus, Sz, QuadratureOptions{r_c, threads});
      },
      py::arg("rho_s"), py::arg("nucleus"), py::arg("Sz_expect"), py::arg("r_c") = 0.05,
      py::arg("threads") = 1);
  m.def(
      "efg_tensor",
      [](const ScalarField& rho, const std::vector<NucleusSpec>& nuclei,
         const NucleusSpec& target, double r_c, int threads) {
        return efg_tensor(rho, nuclei, target, QuadratureOptions{r_c, threads});
      },
      py::arg("rho"), py::arg("nuclei"), py::arg("target"), py::arg("r_c") = 0.05,
      py::arg("threads") = 1);
  m.def("efg_pas_eigenvalues", &efg_pas_eigenvalues, py::arg("efg"));
  m.def("q_matrix", &q_matrix, py::arg("pas_values"), py::arg("nucleus"));
  m.def(
      "dipolar_coupling_direct",
      [](const ScalarField& rho_a, const ScalarField& rho_b, int chi, double r_c,
         int threads) {
        return dipolar_coupling_direct(rho_a, rho_b, chi, QuadratureOptions{r_c, threads});
      },
      py::arg("rho_a"), py::arg("rho_b"), py::arg("chi"), py::arg("r_c") = 0.05,
      py::arg("threads") = 1);

  // --- spectral densities -----------------------------------------------------------
  py::class_<SpectralDensity>(m, "SpectralDensity")
      .def_readonly("observable", &SpectralDensity::observable)
      .def_readonly("bin_edges", &SpectralDensity::bin_edges)
      .def_readonly("weights", &SpectralDensity::weights)
      .def_readonly("deltas", &SpectralDensity::deltas);

  m.def("default_bins", &default_bins, py::arg("spectrum"), py::arg("bins") = 200,
        py::arg("omega_min_THz") = default_omega_min_THz);
  m.def("spectral_density", &spectral_density, py::arg("spectrum"), py::arg("curvatures"),
        py::arg("bin_edges"), py::arg("omega_min_THz") = default_omega_min_THz);
  m.def("shift_ratio", &shift_ratio, py::arg("s1"), py::arg("s2"), py::arg("T_K"),
        py::arg("zeta") = 0.0);

  // --- file formats -------------------------------------------------------------------
  auto io_mod = m.def_submodule("io");
  io_mod.def("read_phonon_file", &io::read_phonon_file, py::arg("path"));
  io_mod.def("write_phonon_file", &io::write_phonon_file, py::arg("path"),
             py::arg("spectrum"));
  io_mod.def(
      "read_curvature_file",
      [](const std::filesystem::path& path, const std::string& observable) {
        return io::read_curvature_file(path, observable);
      },
      py::arg("path"), py::arg("observable") = "");
  io_mod.def("read_lattice_file", &io::read_lattice_file, py::arg("path"));
  io_mod.def("read_nu_of_a_file", &io::read_nu_of_a_file, py::arg("path"));
  io_mod.def("read_grid_file", &io::read_grid_file, py::arg("path"));
  io_mod.def("write_grid_file", &io::write_grid_file, py::arg("path"), py::arg("field"));
  io_mod.def("read_nuclei_file", &io::read_nuclei_file, py::arg("path"));
  io_mod.def(
      "read_tensor_file",
      [](const std::filesystem::path& path) { return io::read_tensor_file(path); },
      py::arg("path"));
  io_mod.def("read_system_file", &io::read_system_file, py::arg("path"));

  m.def("write_fixture_bundle", &fixtures::write_bundle, py::arg("directory"));
}
