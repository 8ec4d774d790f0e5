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

#include <complex>
#include <cstddef>
#include <span>

#include "cvclone/bogoliubov.hpp"

namespace cvclone {

/// Gaussian state of n modes: interleaved quadrature means (x1, p1, ...) and
/// the symmetric covariance matrix. Vacuum has cov = I/2.
class GaussianState {
 public:
  GaussianState(RVector mean, RMatrix cov);

  std::size_t n_modes() const { return static_cast<std::size_t>(mean_.size() / 2); }
  const RVector& mean() const { return mean_; }
  const RMatrix& cov() const { return cov_; }

  /// <a_k> recovered from the quadrature means.
  Complex amplitude(std::size_t mode) const;

 private:
  RVector mean_;
  RMatrix cov_;
};

GaussianState vacuum_state(std::size_t n_modes);

/// Product of coherent states; amplitude 0 is vacuum.
GaussianState coherent_vacuum_input(std::span<const Complex> amplitudes);

/// Heisenberg evolution of means and covariances under `t`.
/// Throws InvariantViolation if `t` fails check_symplectic at `tol`.
GaussianState apply_to_gaussian(const BogoliubovTransform& t, const GaussianState& s,
                                double tol = kSymplecticTol);

/// Single-mode marginal (Gaussian partial trace).
GaussianState reduce(const GaussianState& s, const ModeLabel& mode);

/// Smallest eigenvalue of cov + (i/2) Omega; non-negative for physical states.
double uncertainty_min_eigenvalue(const GaussianState& s);

/// Total mean photon number sum_k <a_k^+ a_k>.
double mean_photon_number(const GaussianState& s);

}  // namespace cvclone
