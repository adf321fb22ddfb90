// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/spin.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "spinshift/errors.hpp"
#include "spinshift/reduction.hpp"

namespace spinshift {

namespace {

using complexd = std::complex<double>;

bool is_half_integer(double j) {
  const double two_j = 2.0 * j;
  return j >= 0.0 && std::abs(two_j - std::round(two_j)) < 1e-9;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

// kron over all slots with identities everywhere except the given ones.
Eigen::MatrixXcd embed(const std::vector<int>& dims,
                       const std::map<int, const Eigen::MatrixXcd*>& ops) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t slot = 0; slot < dims.size(); ++slot) {
    auto it = ops.find(static_cast<int>(slot));
    if (it != ops.end())
      acc = kron(acc, *it->second);
    else
      acc = kron(acc, Eigen::MatrixXcd::Identity(dims[slot], dims[slot]));
  }
  return acc;
}

} // namespace

std::string format_projection(double m) {
  const auto two_m = static_cast<long>(std::llround(2.0 * m));
  std::string s;
  if (two_m > 0) s += "+";
  if (two_m % 2 == 0) {
    s += std::to_string(two_m / 2);
  } else {
    s += std::to_string(two_m) + "/2";
  }
  return s;
}

SpinOperators spin_operators(double j) {
  if (!is_half_integer(j))
    throw ValidationError("spin_operators: 2j must be a non-negative integer");
  const int dim = static_cast<int>(std::llround(2.0 * j)) + 1;

  SpinOperators ops;
  ops.j = j;
  ops.dim = dim;
  ops.jz = Eigen::MatrixXcd::Zero(dim, dim);
  ops.jplus = Eigen::MatrixXcd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const double m = j - col;
    ops.jz(col, col) = complexd(m, 0.0);
    if (col > 0) {
      // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
      const double amp = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
      ops.jplus(col - 1, col) = complexd(amp, 0.0);
    }
  }
  ops.jminus = ops.jplus.adjoint();
  ops.jx = 0.5 * (ops.jplus + ops.jminus);
  ops.jy = complexd(0.0, -0.5) * (ops.jplus - ops.jminus);
  return ops;
}

std::string tensor_kind_name(TensorKind kind) {
  switch (kind) {
    case TensorKind::D: return "D";
    case TensorKind::A: return "A";
    case TensorKind::Q: return "Q";
    case TensorKind::EFG: return "EFG";
  }
  return "?";
}

TensorKind tensor_kind_from_name(const std::string& name) {
  if (name == "D") return TensorKind::D;
  if (name == "A") return TensorKind::A;
  if (name == "Q") return TensorKind::Q;
  if (name == "EFG") return TensorKind::EFG;
  throw ValidationError("unknown tensor kind '" + name + "'");
}

void InteractionTensor::validate() const {
  const double norm = matrix.norm();
  if (kind == TensorKind::A) return; // full storage, no symmetry demanded
  const double scale = std::max(norm, 1e-300);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(matrix(i, j) - matrix(j, i)) > 1e-10 * scale)
        throw ValidationError(tensor_kind_name(kind) + " tensor is not symmetric");
  if (std::abs(matrix.trace()) > 1e-8 * scale)
    throw ValidationError(tensor_kind_name(kind) + " tensor is not traceless");
}

int SpinSystem::dimension() const {
  double dim = 2.0 * S + 1.0;
  for (const auto& n : nuclei) dim *= 2.0 * n.I + 1.0;
  return static_cast<int>(std::llround(dim));
}

void SpinSystem::validate() const {
  if (!is_half_integer(S)) throw ValidationError("spin system: invalid electron spin S");
  D.validate();
  for (const auto& n : nuclei) {
    if (!is_half_integer(n.I))
      throw ValidationError("spin system: invalid nuclear spin I");
    n.A.validate();
    if (n.Q) n.Q->validate();
  }
  if (quantization_axis.norm() < 1e-12)
    throw ValidationError("spin system: zero quantization axis");
}

Eigen::MatrixXcd build_full_hamiltonian(const SpinSystem& system, int dimension_limit) {
  system.validate();
  const int dim = system.dimension();
  if (dim > dimension_limit)
    throw ValidationError("spin system dimension " + std::to_string(dim) +
                          " exceeds limit " + std::to_string(dimension_limit));

  std::vector<int> dims;
  dims.push_back(static_cast<int>(std::llround(2.0 * system.S)) + 1);
  std::vector<SpinOperators> nuclear_ops;
  for (const auto& n : system.nuclei) {
    nuclear_ops.push_back(spin_operators(n.I));
    dims.push_back(nuclear_ops.back().dim);
  }
  const SpinOperators se = spin_operators(system.S);
  const std::array<const Eigen::MatrixXcd*, 3> s_small = {&se.jx, &se.jy, &se.jz};

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  // Electron ZFS term assembled in the electron slot, embedded once.
  {
    Eigen::MatrixXcd d_small = Eigen::MatrixXcd::Zero(se.dim, se.dim);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        d_small += system.D.matrix(i, j) * (*s_small[i]) * (*s_small[j]);
    h += embed(dims, {{0, &d_small}});
  }

  for (std::size_t n = 0; n < system.nuclei.size(); ++n) {
    const auto& nucleus = system.nuclei[n];
    const SpinOperators& in = nuclear_ops[n];
    const std::array<const Eigen::MatrixXcd*, 3> i_small = {&in.jx, &in.jy, &in.jz};
    const int slot = static_cast<int>(n) + 1;

    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double a_ij = nucleus.A.matrix(i, j);
        if (a_ij != 0.0)
          h += a_ij * embed(dims, {{0, s_small[i]}, {slot, i_small[j]}});
      }

    if (nucleus.Q) {
      Eigen::MatrixXcd q_small = Eigen::MatrixXcd::Zero(in.dim, in.dim);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          q_small += nucleus.Q->matrix(i, j) * (*i_small[i]) * (*i_small[j]);
      h += embed(dims, {{slot, &q_small}});
    }
  }

  // Exact Hermitian symmetrization; term-by-term roundoff is the only
  // asymmetry left and this removes it bitwise.
  h = 0.5 * (h + Eigen::MatrixXcd(h.adjoint()));
  return h;
}

namespace {

std::vector<std::string> basis_labels(const SpinSystem& system) {
  std::vector<int> dims;
  std::vector<double> j_of_slot;
  dims.push_back(static_cast<int>(std::llround(2.0 * system.S)) + 1);
  j_of_slot.push_back(system.S);
  for (const auto& n : system.nuclei) {
    dims.push_back(static_cast<int>(std::llround(2.0 * n.I)) + 1);
    j_of_slot.push_back(n.I);
  }
  const int dim = [&] {
    int d = 1;
    for (int v : dims) d *= v;
    return d;
  }();

  std::vector<std::string> labels(static_cast<std::size_t>(dim));
  for (int idx = 0; idx < dim; ++idx) {
    int rest = idx;
    std::vector<int> sub(dims.size());
    for (std::size_t s = dims.size(); s-- > 0;) {
      sub[s] = rest % dims[s];
      rest /= dims[s];
    }
    std::string label;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      if (s) label += ":";
      label += format_projection(j_of_slot[s] - sub[s]);
    }
    labels[static_cast<std::size_t>(idx)] = label;
  }
  return labels;
}

} // namespace

LevelSet diagonalize(const SpinSystem& system, int dimension_limit) {
  const Eigen::MatrixXcd h = build_full_hamiltonian(system, dimension_limit);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericError("diagonalize: eigensolver failed to converge");

  const auto labels = basis_labels(system);
  LevelSet out;
  out.basis = "product basis, electron slowest, nuclei in declaration order";
  const int dim = static_cast<int>(h.rows());
  out.energies.resize(static_cast<std::size_t>(dim));
  out.labels.resize(static_cast<std::size_t>(dim));
  out.dominant_weight.resize(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    out.energies[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    int best = 0;
    double best_w = 0.0;
    for (int b = 0; b < dim; ++b) {
      const double w = std::norm(solver.eigenvectors()(b, k));
      if (w > best_w) {
        best_w = w;
        best = b;
      }
    }
    out.labels[static_cast<std::size_t>(k)] = labels[static_cast<std::size_t>(best)];
    out.dominant_weight[static_cast<std::size_t>(k)] = best_w;
  }
  return out;
}

LevelSet build_reduced(double D_MHz, double Q_MHz, double A_zz_MHz) {
  struct Entry {
    double energy;
    std::string label;
  };
  std::vector<Entry> entries;
  for (int ms = -1; ms <= 1; ++ms)
    for (int mi = -1; mi <= 1; ++mi)
      entries.push_back({D_MHz * ms * ms + Q_MHz * mi * mi + A_zz_MHz * ms * mi,
                         format_projection(ms) + ":" + format_projection(mi)});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.energy < b.energy; });
  LevelSet out;
  out.basis = "reduced model: E(m_S, m_I) = D m_S^2 + Q m_I^2 + A_zz m_S m_I";
  for (const auto& e : entries) {
    out.energies.push_back(e.energy);
    out.labels.push_back(e.label);
    out.dominant_weight.push_back(1.0);
  }
  return out;
}

double transition_frequency(const LevelSet& levels, const std::string& from_label,
                            const std::string& to_label) {
  auto resolve = [&](const std::string& label) {
    int found = -1;
    for (std::size_t k = 0; k < levels.labels.size(); ++k) {
      if (levels.labels[k] != label) continue;
      if (found >= 0)
        throw ValidationError("transition_frequency: label '" + label +
                              "' is ambiguous (two levels share the dominant character)");
      found = static_cast<int>(k);
    }
    if (found < 0)
      throw ValidationError("transition_frequency: no level labeled '" + label + "'");
    // Slack absorbs roundoff for exactly half-mixed pairs.
    if (levels.dominant_weight[static_cast<std::size_t>(found)] <= 0.5 + 1e-9)
      throw ValidationError("transition_frequency: label '" + label +
                            "' has mixed character (dominant weight <= 50%)");
    return found;
  };
  const int a = resolve(from_label);
  const int b = resolve(to_label);
  return std::abs(levels.energies[static_cast<std::size_t>(b)] -
                  levels.energies[static_cast<std::size_t>(a)]);
}

AxialForm principal_axis_form(const Eigen::Matrix3d& tensor,
                              const Eigen::Vector3d& quantization_axis) {
  if ((tensor - tensor.transpose()).norm() > 1e-10 * std::max(tensor.norm(), 1e-300))
    throw ValidationError("principal_axis_form: tensor must be symmetric");
  const Eigen::Vector3d axis = quantization_axis.normalized();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(tensor);
  if (solver.info() != Eigen::Success)
    throw NumericError("principal_axis_form: eigensolver failed");
  const Eigen::Vector3d lambda = solver.eigenvalues();
  const Eigen::Matrix3d vecs = solver.eigenvectors();

  int zi = 0;
  double best = -1.0;
  for (int k = 0; k < 3; ++k) {
    const double overlap = std::abs(vecs.col(k).dot(axis));
    if (overlap > best) {
      best = overlap;
      zi = k;
    }
  }
  Eigen::Vector3d ez = vecs.col(zi);
  if (ez.dot(axis) < 0.0) ez = -ez;

  // Remaining two axes: x takes the larger eigenvalue, y closes the frame.
  int rest[2], r = 0;
  for (int k = 0; k < 3; ++k)
    if (k != zi) rest[r++] = k;
  const int xi = (lambda(rest[0]) >= lambda(rest[1])) ? rest[0] : rest[1];
  const Eigen::Vector3d ex = vecs.col(xi);
  const Eigen::Vector3d ey = ez.cross(ex);

  const double lz = lambda(zi);
  if (lz == 0.0)
    throw NumericError("principal_axis_form: zero principal value along the axis");
  const double lx = ex.dot(tensor * ex);
  const double ly = ey.dot(tensor * ey);

  AxialForm out;
  out.splitting = 1.5 * lz;
  out.asymmetry = (lx - ly) / lz;
  out.pas_values = Eigen::Vector3d(lx, ly, lz);
  out.axes.row(0) = ex;
  out.axes.row(1) = ey;
  out.axes.row(2) = ez;
  return out;
}

PrincipalAxisForms principal_axis_forms(const InteractionTensor& D_tensor,
                                        const InteractionTensor& Q_tensor,
                                        const Eigen::Vector3d& quantization_axis) {
  D_tensor.validate();
  Q_tensor.validate();
  const AxialForm d = principal_axis_form(D_tensor.matrix, quantization_axis);
  const AxialForm q = principal_axis_form(Q_tensor.matrix, quantization_axis);
  return PrincipalAxisForms{d.splitting, d.asymmetry, q.splitting, q.asymmetry};
}

double c13_hyperfine_frequency(const Eigen::Matrix3d& A_MHz, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-8)
    throw ValidationError("c13_hyperfine_frequency: axis must be normalized");
  const Eigen::Vector3d row = A_MHz.transpose() * axis; // components (e_z . A)_j
  return row.norm();
}

std::vector<NucleusGroup> group_equivalent_nuclei(
    const std::vector<std::pair<int, double>>& site_frequencies, double tol) {
  if (!(tol > 0.0)) throw ValidationError("group_equivalent_nuclei: tol must be positive");
  auto sorted = site_frequencies;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::vector<NucleusGroup> groups;
  std::vector<KahanSum> sums;
  double prev = 0.0;
  for (const auto& [id, nu] : sorted) {
    const bool start_new =
        groups.empty() || std::abs(prev - nu) > tol * std::max(prev, nu);
    if (start_new) {
      groups.push_back({});
      sums.emplace_back();
    }
    groups.back().site_ids.push_back(id);
    sums.back().add(nu);
    prev = nu;
  }
  for (std::size_t g = 0; g < groups.size(); ++g)
    groups[g].mean_frequency_MHz =
        sums[g].value() / static_cast<double>(groups[g].site_ids.size());
  return groups;
}

} // namespace spinshift
