// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#include "spinshift/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spinshift/constants.hpp"
#include "spinshift/errors.hpp"

namespace spinshift::io {

namespace fs = std::filesystem;

std::string format_float(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0; // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", value);
  return buf;
}

std::string format_float_exact(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

// Shared tokenizer keeping the path:line context for error messages.
class LineReader {
public:
  LineReader(const fs::path& path, const std::string& expected_header)
      : path_(path), in_(path) {
    if (!in_)
      throw ParseError(path.string() + ": cannot open file");
    std::string header;
    if (!std::getline(in_, header))
      throw ParseError(path.string() + ": empty file");
    ++line_no_;
    // Trim trailing CR for portability.
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != expected_header)
      throw ParseError(path.string() + ":1: expected header '" + expected_header +
                       "', found '" + header + "'");
  }

  // Next non-empty, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(path_.string() + ":" + std::to_string(line_no_) + ": " + msg);
  }

  double to_double(const std::string& tok) const {
    try {
      std::size_t pos = 0;
      const double v = std::stod(tok, &pos);
      if (pos != tok.size()) fail("bad number '" + tok + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number '" + tok + "'");
    }
  }

  int to_int(const std::string& tok) const {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) fail("bad integer '" + tok + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad integer '" + tok + "'");
    }
  }

  const fs::path& path() const { return path_; }
  int line() const { return line_no_; }

private:
  fs::path path_;
  std::ifstream in_;
  int line_no_ = 0;
};

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot open for writing");
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// phonon spectra

PhononSpectrum read_phonon_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-phonon v1");
  PhononSpectrum spectrum;
  spectrum.label = path.stem().string();
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 3) reader.fail("expected 'index freq_THz mass_amu'");
    PhononMode mode;
    mode.index = reader.to_int(tok[0]);
    mode.omega = reader.to_double(tok[1]) * units::THz_to_rad_per_s;
    mode.effective_mass = reader.to_double(tok[2]);
    if (!(mode.effective_mass > 0.0))
      throw ValidationError(path.string() + ":" + std::to_string(reader.line()) +
                            ": effective mass must be positive");
    spectrum.modes.push_back(std::move(mode));
  }
  if (spectrum.modes.empty())
    throw ValidationError(path.string() + ": no modes");
  validate_spectrum(spectrum);
  return spectrum;
}

void write_phonon_file(const fs::path& path, const PhononSpectrum& spectrum) {
  auto out = open_out(path);
  out << "#spinshift-phonon v1\n";
  out << "# index  freq_THz  mass_amu\n";
  for (const auto& m : spectrum.modes)
    out << m.index << "  " << format_float_exact(m.omega * units::rad_per_s_to_THz)
        << "  " << format_float_exact(m.effective_mass) << "\n";
}

void read_displacement_file(const fs::path& path, PhononSpectrum& spectrum) {
  LineReader reader(path, "#spinshift-displacements v1");
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 3 || tok[0] != "mode")
      reader.fail("expected 'mode <index> <n_atoms>'");
    const int index = reader.to_int(tok[1]);
    const int n_atoms = reader.to_int(tok[2]);
    if (n_atoms <= 0) reader.fail("atom count must be positive");
    std::vector<std::array<double, 3>> pattern;
    pattern.reserve(static_cast<std::size_t>(n_atoms));
    for (int a = 0; a < n_atoms; ++a) {
      if (!reader.next(tok) || tok.size() != 3) reader.fail("expected 3 components");
      pattern.push_back({reader.to_double(tok[0]), reader.to_double(tok[1]),
                         reader.to_double(tok[2])});
    }
    bool matched = false;
    for (auto& mode : spectrum.modes) {
      if (mode.index != index) continue;
      mode.displacement_pattern = std::move(pattern);
      validate_mode(mode);
      matched = true;
      break;
    }
    if (!matched)
      throw ValidationError(path.string() + ": displacement block for unknown mode " +
                            std::to_string(index));
  }
}

void write_displacement_file(const fs::path& path, const PhononSpectrum& spectrum) {
  auto out = open_out(path);
  out << "#spinshift-displacements v1\n";
  for (const auto& m : spectrum.modes) {
    if (!m.displacement_pattern) continue;
    out << "mode " << m.index << " " << m.displacement_pattern->size() << "\n";
    for (const auto& v : *m.displacement_pattern)
      out << format_float_exact(v[0]) << "  " << format_float_exact(v[1]) << "  "
          << format_float_exact(v[2]) << "\n";
  }
}

// ---------------------------------------------------------------------------
// curvature samples

CurvatureSet read_curvature_file(const fs::path& path, const std::string& observable) {
  LineReader reader(path, "#spinshift-curvature v1");
  CurvatureSet set;
  set.observable = observable.empty() ? path.stem().string() : observable;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 5)
      reader.fail("expected 'mode_index delta_q_A nu_plus_MHz nu_minus_MHz nu_zero_MHz'");
    CurvatureSample s;
    s.mode_index = reader.to_int(tok[0]);
    s.delta_q = reader.to_double(tok[1]);
    s.nu_plus = reader.to_double(tok[2]);
    s.nu_minus = reader.to_double(tok[3]);
    s.nu_zero = reader.to_double(tok[4]);
    set.samples.push_back(s);
  }
  set.validate();
  return set;
}

void write_curvature_file(const fs::path& path, const CurvatureSet& set) {
  auto out = open_out(path);
  out << "#spinshift-curvature v1\n";
  out << "# mode_index  delta_q_A  nu_plus_MHz  nu_minus_MHz  nu_zero_MHz\n";
  for (const auto& s : set.samples)
    out << s.mode_index << "  " << format_float_exact(s.delta_q) << "  "
        << format_float_exact(s.nu_plus) << "  " << format_float_exact(s.nu_minus)
        << "  " << format_float_exact(s.nu_zero) << "\n";
}

// ---------------------------------------------------------------------------
// lattice table and nu(a)

LatticeTable read_lattice_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-lattice v1");
  LatticeTable table;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 2) reader.fail("expected 'T_K a_A'");
    table.temperature.push_back(reader.to_double(tok[0]));
    table.lattice_parameter.push_back(reader.to_double(tok[1]));
  }
  table.validate();
  return table;
}

void write_lattice_file(const fs::path& path, const LatticeTable& table) {
  auto out = open_out(path);
  out << "#spinshift-lattice v1\n";
  out << "# T_K  a_A\n";
  for (std::size_t i = 0; i < table.temperature.size(); ++i)
    out << format_float_exact(table.temperature[i]) << "  "
        << format_float_exact(table.lattice_parameter[i]) << "\n";
}

std::vector<std::pair<double, double>> read_nu_of_a_file(const fs::path& path) {
  // Header optional for this format: plain two-column files are accepted.
  std::ifstream probe(path);
  if (!probe) throw ParseError(path.string() + ": cannot open file");
  std::string first;
  std::getline(probe, first);
  probe.close();

  std::vector<std::pair<double, double>> samples;
  if (first.rfind("#spinshift-nu-of-a", 0) == 0) {
    LineReader reader(path, "#spinshift-nu-of-a v1");
    std::vector<std::string> tok;
    while (reader.next(tok)) {
      if (tok.size() != 2) reader.fail("expected 'a_A nu_MHz'");
      samples.emplace_back(reader.to_double(tok[0]), reader.to_double(tok[1]));
    }
  } else {
    std::ifstream in(path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      std::vector<std::string> tok;
      std::string t;
      while (ss >> t) {
        if (t[0] == '#') break;
        tok.push_back(t);
      }
      if (tok.empty()) continue;
      if (tok.size() != 2)
        throw ParseError(path.string() + ":" + std::to_string(line_no) +
                         ": expected 'a_A nu_MHz'");
      try {
        samples.emplace_back(std::stod(tok[0]), std::stod(tok[1]));
      } catch (const std::logic_error&) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": bad number");
      }
    }
  }
  if (samples.size() < 2)
    throw ValidationError(path.string() + ": need at least two (a, nu) samples");
  return samples;
}

void write_nu_of_a_file(const fs::path& path,
                        const std::vector<std::pair<double, double>>& samples) {
  auto out = open_out(path);
  out << "#spinshift-nu-of-a v1\n";
  out << "# a_A  nu_MHz\n";
  for (const auto& [a, nu] : samples)
    out << format_float_exact(a) << "  " << format_float_exact(nu) << "\n";
}

// ---------------------------------------------------------------------------
// tensors and spin systems

InteractionTensor read_tensor_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-tensor v1");
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "kind")
    reader.fail("expected 'kind D|A|Q|EFG'");
  InteractionTensor tensor;
  tensor.kind = tensor_kind_from_name(tok[1]);
  for (int r = 0; r < 3; ++r) {
    if (!reader.next(tok) || tok.size() != 3) reader.fail("expected 3 tensor values");
    for (int c = 0; c < 3; ++c) tensor.matrix(r, c) = reader.to_double(tok[static_cast<std::size_t>(c)]);
  }
  tensor.validate();
  return tensor;
}

void write_tensor_file(const fs::path& path, const InteractionTensor& tensor) {
  auto out = open_out(path);
  out << "#spinshift-tensor v1\n";
  out << "kind " << tensor_kind_name(tensor.kind) << "\n";
  for (int r = 0; r < 3; ++r)
    out << format_float_exact(tensor.matrix(r, 0)) << "  "
        << format_float_exact(tensor.matrix(r, 1)) << "  "
        << format_float_exact(tensor.matrix(r, 2)) << "\n";
}

SpinSystem read_system_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-system v1");
  const fs::path base = path.parent_path();
  SpinSystem system;
  bool have_s = false, have_d = false;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok[0] == "S" && tok.size() == 2) {
      system.S = reader.to_double(tok[1]);
      have_s = true;
    } else if (tok[0] == "axis" && tok.size() == 4) {
      system.quantization_axis = Eigen::Vector3d(
          reader.to_double(tok[1]), reader.to_double(tok[2]), reader.to_double(tok[3]));
    } else if (tok[0] == "D" && tok.size() == 2) {
      system.D = read_tensor_file(base / tok[1]);
      have_d = true;
    } else if (tok[0] == "nucleus" && (tok.size() == 3 || tok.size() == 4)) {
      NuclearSpin nucleus;
      nucleus.I = reader.to_double(tok[1]);
      nucleus.A = read_tensor_file(base / tok[2]);
      if (tok.size() == 4 && tok[3] != "-")
        nucleus.Q = read_tensor_file(base / tok[3]);
      nucleus.name = "nucleus" + std::to_string(system.nuclei.size() + 1);
      system.nuclei.push_back(std::move(nucleus));
    } else {
      reader.fail("unrecognized system entry '" + tok[0] + "'");
    }
  }
  if (!have_s) throw ValidationError(path.string() + ": missing 'S' line");
  if (!have_d) throw ValidationError(path.string() + ": missing 'D' line");
  system.validate();
  return system;
}

// ---------------------------------------------------------------------------
// density grids

ScalarField read_grid_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-grid v1");
  ScalarField field;
  std::vector<std::string> tok;

  if (!reader.next(tok) || tok.size() != 4 || tok[0] != "origin")
    reader.fail("expected 'origin x y z'");
  field.origin = Eigen::Vector3d(reader.to_double(tok[1]), reader.to_double(tok[2]),
                                 reader.to_double(tok[3]));
  for (int d = 0; d < 3; ++d) {
    if (!reader.next(tok) || tok.size() != 4 || tok[0] != "spacing")
      reader.fail("expected 'spacing ex ey ez'");
    field.spacing[static_cast<std::size_t>(d)] = Eigen::Vector3d(
        reader.to_double(tok[1]), reader.to_double(tok[2]), reader.to_double(tok[3]));
  }
  if (!reader.next(tok) || tok.size() != 4 || tok[0] != "dims")
    reader.fail("expected 'dims nx ny nz'");
  for (int d = 0; d < 3; ++d) field.dims[static_cast<std::size_t>(d)] = reader.to_int(tok[static_cast<std::size_t>(d) + 1]);

  field.values.reserve(field.size());
  while (reader.next(tok))
    for (const auto& t : tok) field.values.push_back(reader.to_double(t));
  if (field.values.size() != field.size())
    throw ParseError(path.string() + ": expected " + std::to_string(field.size()) +
                     " grid values, found " + std::to_string(field.values.size()));
  field.validate();
  return field;
}

void write_grid_file(const fs::path& path, const ScalarField& field) {
  field.validate();
  auto out = open_out(path);
  out << "#spinshift-grid v1\n";
  out << "origin " << format_float_exact(field.origin.x()) << " "
      << format_float_exact(field.origin.y()) << " "
      << format_float_exact(field.origin.z()) << "\n";
  for (const auto& e : field.spacing)
    out << "spacing " << format_float_exact(e.x()) << " " << format_float_exact(e.y())
        << " " << format_float_exact(e.z()) << "\n";
  out << "dims " << field.dims[0] << " " << field.dims[1] << " " << field.dims[2] << "\n";
  // x-fastest order, a few values per line to stay diffable.
  std::size_t col = 0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    out << format_float_exact(field.values[i]);
    if (++col == 4 || i + 1 == field.values.size()) {
      out << "\n";
      col = 0;
    } else {
      out << " ";
    }
  }
}

ScalarField read_cube_file(const fs::path& path, std::vector<NucleusSpec>* atoms) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::string line;
  std::getline(in, line);
  std::getline(in, line); // two comment lines

  int n_atoms = 0;
  ScalarField field;
  double scale = units::bohr_to_angstrom; // positive counts mean Bohr
  {
    in >> n_atoms >> field.origin.x() >> field.origin.y() >> field.origin.z();
    if (!in) throw ParseError(path.string() + ": bad cube atom/origin line");
  }
  bool dset_ids = false;
  if (n_atoms < 0) {
    // Negative atom count flags a trailing DSET_IDS line.
    n_atoms = -n_atoms;
    dset_ids = true;
  }
  for (int d = 0; d < 3; ++d) {
    long n = 0;
    Eigen::Vector3d v;
    in >> n >> v.x() >> v.y() >> v.z();
    if (!in) throw ParseError(path.string() + ": bad cube voxel line");
    if (n < 0) {
      n = -n;
      if (d == 0) scale = 1.0; // negative counts mean Angstrom
    }
    field.dims[static_cast<std::size_t>(d)] = static_cast<int>(n);
    field.spacing[static_cast<std::size_t>(d)] = v;
  }
  field.origin *= scale;
  for (auto& e : field.spacing) e *= scale;

  std::vector<NucleusSpec> atom_list;
  for (int a = 0; a < n_atoms; ++a) {
    int z = 0;
    double charge = 0.0;
    Eigen::Vector3d r;
    in >> z >> charge >> r.x() >> r.y() >> r.z();
    if (!in) throw ParseError(path.string() + ": bad cube atom entry");
    NucleusSpec spec;
    spec.name = "atom" + std::to_string(a + 1);
    spec.Z = z;
    spec.position = r * scale;
    atom_list.push_back(std::move(spec));
  }
  if (dset_ids) {
    int m = 0;
    in >> m;
    for (int i = 0; i < m; ++i) {
      int ignore;
      in >> ignore;
    }
  }

  field.values.assign(field.size(), 0.0);
  // Cube order: x slowest, z fastest.
  for (int i = 0; i < field.dims[0]; ++i)
    for (int j = 0; j < field.dims[1]; ++j)
      for (int k = 0; k < field.dims[2]; ++k) {
        double v;
        if (!(in >> v))
          throw ParseError(path.string() + ": truncated cube value block");
        field.values[field.index(i, j, k)] = v;
      }
  field.validate();
  if (atoms) *atoms = std::move(atom_list);
  return field;
}

// ---------------------------------------------------------------------------
// nuclei

std::vector<NucleusSpec> read_nuclei_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-nuclei v1");
  std::vector<NucleusSpec> nuclei;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 8)
      reader.fail("expected 'name x_A y_A z_A Z I g_MHz_per_T Q_emb'");
    NucleusSpec n;
    n.name = tok[0];
    n.position = Eigen::Vector3d(reader.to_double(tok[1]), reader.to_double(tok[2]),
                                 reader.to_double(tok[3]));
    n.Z = reader.to_int(tok[4]);
    n.I = reader.to_double(tok[5]);
    n.g_MHz_per_T = reader.to_double(tok[6]);
    n.Q_emb = reader.to_double(tok[7]);
    if (n.Z <= 0)
      throw ValidationError(path.string() + ":" + std::to_string(reader.line()) +
                            ": nuclear charge must be positive");
    nuclei.push_back(std::move(n));
  }
  if (nuclei.empty()) throw ValidationError(path.string() + ": no nuclei");
  return nuclei;
}

void write_nuclei_file(const fs::path& path, const std::vector<NucleusSpec>& nuclei) {
  auto out = open_out(path);
  out << "#spinshift-nuclei v1\n";
  out << "# name  x_A y_A z_A  Z  I  g_MHz_per_T  Q_emb\n";
  for (const auto& n : nuclei)
    out << n.name << "  " << format_float_exact(n.position.x()) << " "
        << format_float_exact(n.position.y()) << " "
        << format_float_exact(n.position.z()) << "  " << n.Z << "  "
        << format_float_exact(n.I) << "  " << format_float_exact(n.g_MHz_per_T) << "  "
        << format_float_exact(n.Q_emb) << "\n";
}

// ---------------------------------------------------------------------------
// oracle input

OracleInput read_oracle_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-oracle v1");
  OracleInput input;
  bool have_t = false;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok[0] == "T_K" && tok.size() == 2) {
      input.temperature_K = reader.to_double(tok[1]);
      have_t = true;
    } else if (tok[0] == "nu0_MHz" && tok.size() == 2) {
      input.nu0_MHz = reader.to_double(tok[1]);
    } else if (tok[0] == "n_max" && tok.size() == 2) {
      input.n_max = reader.to_int(tok[1]);
    } else if (tok[0] == "mode" && tok.size() == 3) {
      input.modes.emplace_back(reader.to_double(tok[1]), reader.to_double(tok[2]));
    } else {
      reader.fail("unrecognized oracle entry '" + tok[0] + "'");
    }
  }
  if (!have_t) throw ValidationError(path.string() + ": missing 'T_K' line");
  if (input.modes.empty()) throw ValidationError(path.string() + ": no modes");
  return input;
}

void write_oracle_file(const fs::path& path, const OracleInput& input) {
  auto out = open_out(path);
  out << "#spinshift-oracle v1\n";
  out << "T_K " << format_float_exact(input.temperature_K) << "\n";
  out << "nu0_MHz " << format_float_exact(input.nu0_MHz) << "\n";
  if (input.n_max > 0) out << "n_max " << input.n_max << "\n";
  out << "# mode  freq_THz  dnu_MHz\n";
  for (const auto& [freq, dnu] : input.modes)
    out << "mode " << format_float_exact(freq) << " " << format_float_exact(dnu) << "\n";
}

// ---------------------------------------------------------------------------
// 13C site tensors

std::vector<SiteTensor> read_sites_file(const fs::path& path) {
  LineReader reader(path, "#spinshift-sites v1");
  std::vector<SiteTensor> sites;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 2 || tok[0] != "site") reader.fail("expected 'site <id>'");
    SiteTensor site;
    site.id = tok[1];
    for (int r = 0; r < 3; ++r) {
      if (!reader.next(tok) || tok.size() != 3) reader.fail("expected 3 tensor values");
      for (int c = 0; c < 3; ++c) site.tensor(r, c) = reader.to_double(tok[static_cast<std::size_t>(c)]);
    }
    sites.push_back(std::move(site));
  }
  if (sites.empty()) throw ValidationError(path.string() + ": no sites");
  return sites;
}

void write_sites_file(const fs::path& path, const std::vector<SiteTensor>& sites) {
  auto out = open_out(path);
  out << "#spinshift-sites v1\n";
  for (const auto& s : sites) {
    out << "site " << s.id << "\n";
    for (int r = 0; r < 3; ++r)
      out << format_float_exact(s.tensor(r, 0)) << "  "
          << format_float_exact(s.tensor(r, 1)) << "  "
          << format_float_exact(s.tensor(r, 2)) << "\n";
  }
}

// ---------------------------------------------------------------------------
// CSV emission

void write_shift_curve_csv(const fs::path& path, const ShiftCurve& curve) {
  auto out = open_out(path);
  out << "T_K,dNu_total_MHz,dNu_expansion_MHz,dNu_dynamic_MHz,dNudT_kHz_per_K\n";
  for (std::size_t i = 0; i < curve.temperatures.size(); ++i) {
    const double deriv = curve.derivative.empty() ? 0.0 : curve.derivative[i];
    out << format_float(curve.temperatures[i]) << "," << format_float(curve.total[i])
        << "," << format_float(curve.expansion_term[i]) << ","
        << format_float(curve.dynamic_term[i]) << "," << format_float(deriv) << "\n";
  }
}

void write_spectral_csv(const fs::path& path, const SpectralDensity& density) {
  auto out = open_out(path);
  out << "omega_THz,S_value\n";
  for (std::size_t b = 0; b + 1 < density.bin_edges.size(); ++b) {
    const double center = 0.5 * (density.bin_edges[b] + density.bin_edges[b + 1]);
    out << format_float(center * units::rad_per_s_to_THz) << ","
        << format_float(density.weights[b]) << "\n";
  }
}

void write_overlay_csv(const fs::path& path, const OverlayTable& table) {
  auto out = open_out(path);
  out << "T_K,dNu_ref,dNu_i,slope\n";
  for (const auto& row : table.rows)
    out << format_float(row.temperature_K) << "," << format_float(row.reference_MHz)
        << "," << format_float(row.value_MHz) << "," << format_float(row.slope) << "\n";
}

void write_levels_csv(const fs::path& path, const LevelSet& levels) {
  auto out = open_out(path);
  out << "energy_MHz,label,dominant_weight\n";
  for (std::size_t k = 0; k < levels.energies.size(); ++k)
    out << format_float(levels.energies[k]) << "," << levels.labels[k] << ","
        << format_float(levels.dominant_weight[k]) << "\n";
}

void write_ratio_csv(const fs::path& path, const std::vector<double>& temperatures,
                     const std::vector<double>& ratios, const std::string& label) {
  auto out = open_out(path);
  out << "T_K,ratio_" << label << "\n";
  for (std::size_t i = 0; i < temperatures.size(); ++i)
    out << format_float(temperatures[i]) << "," << format_float(ratios[i]) << "\n";
}

void write_groups_csv(const fs::path& path, const std::vector<NucleusGroup>& groups,
                      const std::vector<std::string>& site_names) {
  auto out = open_out(path);
  out << "group,nu_A_MHz,n_sites,members\n";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out << (g + 1) << "," << format_float(groups[g].mean_frequency_MHz) << ","
        << groups[g].site_ids.size() << ",";
    for (std::size_t s = 0; s < groups[g].site_ids.size(); ++s) {
      if (s) out << ";";
      out << site_names[static_cast<std::size_t>(groups[g].site_ids[s])];
    }
    out << "\n";
  }
}

} // namespace spinshift::io
