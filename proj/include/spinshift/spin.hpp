// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinshift {

// Angular-momentum matrices in the |j, m> basis ordered m = j, j-1, ..., -j
// (so jz = diag(j, ..., -j)).
struct SpinOperators {
  double j = 0.0;
  int dim = 0;
  Eigen::MatrixXcd jx, jy, jz, jplus, jminus;
};

SpinOperators spin_operators(double j);

enum class TensorKind { D, A, Q, EFG };
enum class TensorFrame { Lab, PrincipalAxis };

std::string tensor_kind_name(TensorKind kind);
TensorKind tensor_kind_from_name(const std::string& name);

// 3x3 real coupling tensor in MHz (V/A^2 for EFG). D, Q and EFG must be
// symmetric and traceless (dipolar and field-gradient kernels are); A is
// stored in full since it need not be symmetric.
struct InteractionTensor {
  Eigen::Matrix3d matrix = Eigen::Matrix3d::Zero();
  TensorKind kind = TensorKind::D;
  TensorFrame frame = TensorFrame::Lab;

  void validate() const;
};

struct NuclearSpin {
  double I = 0.0;
  InteractionTensor A;
  std::optional<InteractionTensor> Q;
  std::string name;
};

struct SpinSystem {
  double S = 1.0;
  InteractionTensor D;
  std::vector<NuclearSpin> nuclei;
  Eigen::Vector3d quantization_axis = Eigen::Vector3d::UnitZ();

  int dimension() const;
  void validate() const;
};

inline constexpr int default_dimension_limit = 4096;

// H = S.D.S + sum_n [S.A_n.I_n + I_n.Q_n.I_n] in the product basis, electron
// index slowest, nuclei in declaration order. Hermitian by construction.
Eigen::MatrixXcd build_full_hamiltonian(const SpinSystem& system,
                                        int dimension_limit = default_dimension_limit);

// Energies ascending; labels give the dominant product-basis character as
// colon-joined projections ("-1:+1" = m_S = -1, first nucleus m_I = +1),
// with the dominant weight |<basis|state>|^2 kept for ambiguity checks.
struct LevelSet {
  std::vector<double> energies; // MHz
  std::vector<std::string> labels;
  std::vector<double> dominant_weight;
  std::string basis;
};

LevelSet diagonalize(const SpinSystem& system,
                     int dimension_limit = default_dimension_limit);

// Reduced NV-style model E(m_S, m_I) = D m_S^2 + Q m_I^2 + A_zz m_S m_I for
// S = 1, I = 1. Labels match the full builder's convention.
LevelSet build_reduced(double D_MHz, double Q_MHz, double A_zz_MHz);

// |E_to - E_from|; labels must resolve to a unique level whose dominant
// weight exceeds 1/2.
double transition_frequency(const LevelSet& levels, const std::string& from_label,
                            const std::string& to_label);

// Principal-axis parameters of one symmetric tensor: splitting 3/2 lambda_z
// and asymmetry (lambda_x - lambda_y)/lambda_z. z is the principal axis with
// the largest overlap with the quantization axis (sign fixed toward it); of
// the remaining two, x takes the larger eigenvalue and y completes a
// right-handed frame. Ties inherit the same rule.
struct AxialForm {
  double splitting = 0.0; // 3/2 lambda_z
  double asymmetry = 0.0; // (lambda_x - lambda_y) / lambda_z
  Eigen::Vector3d pas_values = Eigen::Vector3d::Zero(); // lambda_x, lambda_y, lambda_z
  Eigen::Matrix3d axes = Eigen::Matrix3d::Identity();   // rows x, y, z
};

AxialForm principal_axis_form(const Eigen::Matrix3d& tensor,
                              const Eigen::Vector3d& quantization_axis);

struct PrincipalAxisForms {
  double D = 0.0;
  double epsilon = 0.0;
  double Q = 0.0;
  double eta = 0.0;
};

PrincipalAxisForms principal_axis_forms(const InteractionTensor& D_tensor,
                                        const InteractionTensor& Q_tensor,
                                        const Eigen::Vector3d& quantization_axis);

// nu_A = |e_z . A|: Euclidean norm of the axis-row of the hyperfine tensor in
// the quantization frame, MHz. The axis must be normalized.
double c13_hyperfine_frequency(const Eigen::Matrix3d& A_MHz,
                               const Eigen::Vector3d& axis);

struct NucleusGroup {
  std::vector<int> site_ids;
  double mean_frequency_MHz = 0.0;
};

// Clusters sites whose frequencies agree within the relative tolerance
// (single linkage along the sorted list); groups come back strongest first.
std::vector<NucleusGroup> group_equivalent_nuclei(
    const std::vector<std::pair<int, double>>& site_frequencies, double tol);

// Projection label helper shared by builders and the CLI ("+1", "0", "-1/2").
std::string format_projection(double m);

} // namespace spinshift
