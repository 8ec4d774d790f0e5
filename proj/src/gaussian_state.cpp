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

#include "cvclone/gaussian_state.hpp"

#include <cmath>
#include <string>

namespace cvclone {

namespace {

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

GaussianState::GaussianState(RVector mean, RMatrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() == 0 || mean_.size() % 2 != 0) {
    throw std::invalid_argument("GaussianState: mean must have even, non-zero length");
  }
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw std::invalid_argument("GaussianState: covariance shape does not match mean");
  }
  const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymplecticTol * std::max(1.0, cov_.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("GaussianState: covariance is not symmetric (deviation " +
                                std::to_string(asym) + ")");
  }
}

Complex GaussianState::amplitude(std::size_t mode) const {
  if (mode >= n_modes()) {
    throw std::out_of_range("GaussianState::amplitude: mode out of range");
  }
  const auto i = static_cast<Eigen::Index>(2 * mode);
  return {mean_(i) / kSqrt2, mean_(i + 1) / kSqrt2};
}

GaussianState vacuum_state(std::size_t n_modes) {
  if (n_modes == 0) {
    throw std::invalid_argument("vacuum_state: n_modes must be >= 1");
  }
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return {RVector::Zero(dim), 0.5 * RMatrix::Identity(dim, dim)};
}

GaussianState coherent_vacuum_input(std::span<const Complex> amplitudes) {
  GaussianState vac = vacuum_state(amplitudes.size());
  RVector mean = vac.mean();
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    mean(i) = kSqrt2 * amplitudes[k].real();
    mean(i + 1) = kSqrt2 * amplitudes[k].imag();
  }
  return {std::move(mean), vac.cov()};
}

GaussianState apply_to_gaussian(const BogoliubovTransform& t, const GaussianState& s, double tol) {
  if (t.n_modes() != s.n_modes()) {
    throw std::invalid_argument("apply_to_gaussian: transform has " + std::to_string(t.n_modes()) +
                                " modes, state has " + std::to_string(s.n_modes()));
  }
  const auto diag = check_symplectic(t, tol);
  if (!diag.passed) {
    throw InvariantViolation("apply_to_gaussian: transform is not symplectic (deviation " +
                             std::to_string(diag.max_dev()) + ")");
  }
  const RMatrix sm = symplectic_matrix(t);
  RMatrix cov = sm * s.cov() * sm.transpose();
  // Re-symmetrize to keep round-off from tripping the constructor check.
  cov = 0.5 * (cov + cov.transpose()).eval();
  return {sm * s.mean(), std::move(cov)};
}

GaussianState reduce(const GaussianState& s, const ModeLabel& mode) {
  if (mode.index >= s.n_modes()) {
    throw std::out_of_range("reduce: mode " + std::to_string(mode.index) + " out of range for " +
                            std::to_string(s.n_modes()) + " modes");
  }
  const auto i = static_cast<Eigen::Index>(2 * mode.index);
  return {s.mean().segment(i, 2), s.cov().block(i, i, 2, 2)};
}

double uncertainty_min_eigenvalue(const GaussianState& s) {
  const RMatrix omega = symplectic_form(s.n_modes());
  const CMatrix h = s.cov().cast<Complex>() + Complex(0.0, 0.5) * omega.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double mean_photon_number(const GaussianState& s) {
  // <a^+ a> = (<x^2> + <p^2> - 1)/2 per mode.
  return 0.5 * (s.cov().trace() + s.mean().squaredNorm() - static_cast<double>(s.n_modes()));
}

}  // namespace cvclone
