// Copyright 2026 The cvcloner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvclone/analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cvclone {

namespace {

void check_mode(const BogoliubovTransform& t, const ModeLabel& m, const char* what) {
  if (m.index >= t.n_modes()) {
    throw std::out_of_range(std::string(what) + ": mode " + std::to_string(m.index) + " out of range for " +
                            std::to_string(t.n_modes()) + " modes");
  }
}

void check_single_mode(const GaussianState& s, const char* what) {
  if (s.n_modes() != 1) {
    throw std::invalid_argument(std::string(what) + ": expected a single-mode state");
  }
}

double anisotropy(const GaussianState& s) {
  const RMatrix& c = s.cov();
  return std::max(std::abs(c(0, 0) - c(1, 1)), std::abs(c(0, 1)));
}

void require_isotropic(const GaussianState& s, double tol, const char* what) {
  // Relative to the noise level so strongly amplified clones are not rejected
  // for round-off.
  const double scale = std::max(1.0, 0.5 * s.cov().trace());
  const double dev = anisotropy(s) / scale;
  if (dev > tol) {
    throw InvariantViolation(std::string(what) + ": covariance is not isotropic (deviation " +
                             std::to_string(dev) + ")");
  }
}

}  // namespace

double chaotic_photons(const BogoliubovTransform& t, const ModeLabel& clone) {
  check_mode(t, clone, "chaotic_photons");
  return t.b().row(static_cast<Eigen::Index>(clone.index)).squaredNorm();
}

double noise_product(const BogoliubovTransform& t, const ModeLabel& clone_a, const ModeLabel& clone_c) {
  return chaotic_photons(t, clone_a) * chaotic_photons(t, clone_c);
}

Complex phase_covariance_defect(const BogoliubovTransform& t, const ModeLabel& clone,
                                std::span<const ModeLabel> signals) {
  check_mode(t, clone, "phase_covariance_defect");
  for (const auto& s : signals) {
    check_mode(t, s, "phase_covariance_defect");
  }
  const auto row = static_cast<Eigen::Index>(clone.index);
  Complex sum = 0.0;
  for (std::size_t k = 0; k < t.n_modes(); ++k) {
    bool is_signal = false;
    for (const auto& s : signals) {
      is_signal = is_signal || s.index == k;
    }
    if (!is_signal) {
      const auto col = static_cast<Eigen::Index>(k);
      sum += t.a()(row, col) * t.b()(row, col);
    }
  }
  return sum;
}

Complex phase_covariance_defect(const BogoliubovTransform& t, const ModeLabel& clone,
                                const ModeLabel& signal) {
  return phase_covariance_defect(t, clone, std::span<const ModeLabel>(&signal, 1));
}

Complex signal_gain(const BogoliubovTransform& t, const ModeLabel& clone,
                    std::span<const ModeLabel> signals) {
  check_mode(t, clone, "signal_gain");
  Complex g = 0.0;
  for (const auto& s : signals) {
    check_mode(t, s, "signal_gain");
    g += t.a()(static_cast<Eigen::Index>(clone.index), static_cast<Eigen::Index>(s.index));
  }
  return g;
}

double thermal_photons(const GaussianState& single_mode) {
  check_single_mode(single_mode, "thermal_photons");
  const RMatrix& c = single_mode.cov();
  return 0.5 * (c(0, 0) + c(1, 1)) - 0.5;
}

double q_function(const GaussianState& single_mode, Complex alpha, double isotropy_tol) {
  check_single_mode(single_mode, "q_function");
  require_isotropic(single_mode, isotropy_tol, "q_function");
  const double width = thermal_photons(single_mode) + 1.0;
  const Complex xi = single_mode.amplitude(0);
  return std::exp(-std::norm(alpha - xi) / width) / (width * std::numbers::pi);
}

double fidelity_coherent(const GaussianState& single_mode, Complex xi, double isotropy_tol) {
  check_single_mode(single_mode, "fidelity_coherent");
  require_isotropic(single_mode, isotropy_tol, "fidelity_coherent");
  const Complex mean = single_mode.amplitude(0);
  const double offset = std::abs(mean - xi);
  if (offset > isotropy_tol * (1.0 + std::abs(xi))) {
    throw InvariantViolation("fidelity_coherent: clone amplitude differs from input by " +
                             std::to_string(offset) + " (not a unit-gain clone)");
  }
  // Overlap of a centred Gaussian with a coherent state: 1/sqrt(det(V + I/2)).
  const RMatrix v = single_mode.cov() + 0.5 * RMatrix::Identity(2, 2);
  return 1.0 / std::sqrt(v.determinant());
}

double ReportResiduals::max() const {
  return std::max({fidelity_photon_identity, q_identity, analytic_n, analytic_f, transform_n, defect});
}

ReportResiduals residuals(const CloneReport& r) {
  ReportResiduals res;
  res.fidelity_photon_identity = std::abs(r.fidelity * (r.n_chaotic + 1.0) - 1.0);
  res.q_identity = std::abs(std::numbers::pi * r.q_peak - r.fidelity);
  const double n_scale = std::max(1.0, std::abs(r.n_chaotic_analytic));
  res.analytic_n = std::abs(r.n_chaotic - r.n_chaotic_analytic) / n_scale;
  res.analytic_f = std::abs(r.fidelity - r.fidelity_analytic);
  res.transform_n = std::abs(r.n_chaotic - r.n_chaotic_transform) / n_scale;
  res.defect = std::abs(r.phase_covariance_defect);
  return res;
}

double analytic_chaotic_photons(const ClonerSpec& spec, std::size_t clone_index) {
  if (const auto* asym = std::get_if<Asym1to2>(&spec.variant)) {
    if (clone_index > 1) {
      throw std::out_of_range("asymmetric cloner has two clones");
    }
    const double sign = clone_index == 0 ? 1.0 : -1.0;
    return 0.5 * std::exp(sign * 2.0 * asym->gamma);
  }
  const auto& sym = std::get<SymNtoM>(spec.variant);
  if (clone_index >= sym.m) {
    throw std::out_of_range("clone index out of range");
  }
  const double n = static_cast<double>(sym.n);
  const double m = static_cast<double>(sym.m);
  return (m - n) / (m * n);
}

double analytic_fidelity(const ClonerSpec& spec, std::size_t clone_index) {
  return 1.0 / (analytic_chaotic_photons(spec, clone_index) + 1.0);
}

MachineReport analyze_machine(const ClonerSpec& spec, Complex xi) {
  const Machine machine = build_machine(spec);
  const auto& t = machine.transform;
  const auto& layout = machine.layout;

  MachineReport report{spec, xi, {}, {}};
  report.diagnostics.symplectic = check_symplectic(t);
  if (const auto* asym = std::get_if<Asym1to2>(&spec.variant)) {
    report.diagnostics.factorization_dev =
        max_abs_difference(asym_factorized(asym->gamma), asym_direct(asym->gamma));
  }

  std::vector<Complex> inputs(t.n_modes(), Complex(0.0));
  for (const auto& s : layout.signals) {
    inputs[s.index] = xi;
  }
  const GaussianState out = apply_to_gaussian(t, coherent_vacuum_input(inputs));
  report.diagnostics.uncertainty_min_eig = uncertainty_min_eigenvalue(out);
  if (layout.anticlone) {
    report.diagnostics.anticlone_photons = mean_photon_number(reduce(out, *layout.anticlone));
  }

  for (std::size_t i = 0; i < layout.clones.size(); ++i) {
    const ModeLabel& mode = layout.clones[i];
    const GaussianState clone = reduce(out, mode);
    CloneReport r;
    r.clone_mode = mode;
    r.signal_amplitude = xi;
    r.output_amplitude = clone.amplitude(0);
    r.n_chaotic = thermal_photons(clone);
    r.n_chaotic_transform = chaotic_photons(t, mode);
    r.n_chaotic_analytic = analytic_chaotic_photons(spec, i);
    r.fidelity = fidelity_coherent(clone, xi);
    r.fidelity_analytic = analytic_fidelity(spec, i);
    r.q_peak = q_function(clone, xi);
    r.phase_covariance_defect = phase_covariance_defect(t, mode, layout.signals);
    report.clones.push_back(r);
  }
  return report;
}

std::vector<CloneReport> clone_report(const ClonerSpec& spec, Complex xi) {
  return analyze_machine(spec, xi).clones;
}

}  // namespace cvclone
