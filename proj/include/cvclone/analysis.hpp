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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cvclone/bogoliubov.hpp"
#include "cvclone/cloning_circuits.hpp"
#include "cvclone/gaussian_state.hpp"

namespace cvclone {

/// Gate for treating a reduced covariance as isotropic thermal noise.
inline constexpr double kIsotropyTol = 1e-8;

/// Added thermal photons in `clone` for vacuum ancillas and coherent signals:
/// the squared norm of the clone's creation-operator row.
double chaotic_photons(const BogoliubovTransform& t, const ModeLabel& clone);

double noise_product(const BogoliubovTransform& t, const ModeLabel& clone_a, const ModeLabel& clone_c);

/// sum_k A[clone,k] B[clone,k] over k outside `signals`. Zero iff the added
/// noise is phase insensitive.
Complex phase_covariance_defect(const BogoliubovTransform& t, const ModeLabel& clone,
                                std::span<const ModeLabel> signals);
Complex phase_covariance_defect(const BogoliubovTransform& t, const ModeLabel& clone,
                                const ModeLabel& signal);

/// Amplitude of `clone` when every signal mode carries the same coherent
/// amplitude 1: sum_k A[clone,k] over the signals.
Complex signal_gain(const BogoliubovTransform& t, const ModeLabel& clone,
                    std::span<const ModeLabel> signals);

/// Chaotic photons of a single-mode state, (cov_xx + cov_pp)/2 - 1/2.
double thermal_photons(const GaussianState& single_mode);

/// Husimi function of a thermalized coherent state. Throws InvariantViolation
/// if the covariance is not isotropic within `isotropy_tol`.
double q_function(const GaussianState& single_mode, Complex alpha, double isotropy_tol = kIsotropyTol);

/// <xi| rho |xi> for an isotropic single-mode Gaussian centred on xi.
/// Throws InvariantViolation for anisotropic noise or a mean that is not xi.
double fidelity_coherent(const GaussianState& single_mode, Complex xi, double isotropy_tol = kIsotropyTol);

struct CloneReport {
  ModeLabel clone_mode;
  Complex signal_amplitude;
  Complex output_amplitude;
  double n_chaotic = 0.0;            // from the reduced covariance
  double n_chaotic_transform = 0.0;  // from the B row
  double n_chaotic_analytic = 0.0;   // closed form for this machine
  double fidelity = 0.0;             // from the reduced covariance
  double fidelity_analytic = 0.0;
  double q_peak = 0.0;  // Q(xi)
  Complex phase_covariance_defect;
};

/// Worst residuals of the report identities F (n+1) = 1 and pi Q(xi) = F, and
/// of the numeric-vs-analytic comparisons.
struct ReportResiduals {
  double fidelity_photon_identity = 0.0;
  double q_identity = 0.0;
  double analytic_n = 0.0;
  double analytic_f = 0.0;
  double transform_n = 0.0;
  double defect = 0.0;

  double max() const;
};

ReportResiduals residuals(const CloneReport& r);

double analytic_chaotic_photons(const ClonerSpec& spec, std::size_t clone_index);
double analytic_fidelity(const ClonerSpec& spec, std::size_t clone_index);

/// Build the machine, feed xi into every signal mode with vacuum elsewhere,
/// and analyse each clone.
std::vector<CloneReport> clone_report(const ClonerSpec& spec, Complex xi);

struct MachineDiagnostics {
  SymplecticDiagnostics symplectic;
  std::optional<double> factorization_dev;  // asymmetric cloner only
  double uncertainty_min_eig = 0.0;
  std::optional<double> anticlone_photons;  // mean photon number of b_out
};

struct MachineReport {
  ClonerSpec spec;
  Complex xi;
  std::vector<CloneReport> clones;
  MachineDiagnostics diagnostics;
};

MachineReport analyze_machine(const ClonerSpec& spec, Complex xi);

}  // namespace cvclone
