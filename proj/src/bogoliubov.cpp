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

#include "cvclone/bogoliubov.hpp"

#include <algorithm>
#include <vector>

namespace cvclone {

BogoliubovTransform::BogoliubovTransform(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0 || a_.rows() != a_.cols()) {
    throw std::invalid_argument("BogoliubovTransform: A must be square and non-empty");
  }
  if (b_.rows() != a_.rows() || b_.cols() != a_.cols()) {
    throw std::invalid_argument("BogoliubovTransform: A and B dimensions differ");
  }
}

BogoliubovTransform identity_transform(std::size_t n_modes) {
  if (n_modes == 0) {
    throw std::invalid_argument("identity_transform: n_modes must be >= 1");
  }
  const auto n = static_cast<Eigen::Index>(n_modes);
  return {CMatrix::Identity(n, n), CMatrix::Zero(n, n)};
}

BogoliubovTransform compose(const BogoliubovTransform& second, const BogoliubovTransform& first) {
  if (second.n_modes() != first.n_modes()) {
    throw std::invalid_argument("compose: mode count mismatch (" + std::to_string(second.n_modes()) +
                                " vs " + std::to_string(first.n_modes()) + ")");
  }
  // second: x -> A2 x + B2 x^+ applied to x = A1 a + B1 a^+.
  CMatrix a = second.a() * first.a() + second.b() * first.b().conjugate();
  CMatrix b = second.a() * first.b() + second.b() * first.a().conjugate();
  return {std::move(a), std::move(b)};
}

BogoliubovTransform embed(const BogoliubovTransform& t, std::span<const ModeLabel> targets,
                          std::size_t total) {
  if (targets.size() != t.n_modes()) {
    throw std::invalid_argument("embed: expected " + std::to_string(t.n_modes()) + " targets, got " +
                                std::to_string(targets.size()));
  }
  std::vector<bool> used(total, false);
  for (const auto& m : targets) {
    if (m.index >= total) {
      throw std::out_of_range("embed: target mode " + std::to_string(m.index) + " out of range for " +
                              std::to_string(total) + " modes");
    }
    if (used[m.index]) {
      throw std::invalid_argument("embed: duplicate target mode " + std::to_string(m.index));
    }
    used[m.index] = true;
  }
  const auto n = static_cast<Eigen::Index>(total);
  CMatrix a = CMatrix::Identity(n, n);
  CMatrix b = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto ri = static_cast<Eigen::Index>(targets[i].index);
    a(ri, ri) = 0.0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const auto rj = static_cast<Eigen::Index>(targets[j].index);
      a(ri, rj) = t.a()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      b(ri, rj) = t.b()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return {std::move(a), std::move(b)};
}

SymplecticDiagnostics check_symplectic(const BogoliubovTransform& t, double tol) {
  const auto n = static_cast<Eigen::Index>(t.n_modes());
  const CMatrix& a = t.a();
  const CMatrix& b = t.b();
  SymplecticDiagnostics d;
  d.unitarity_dev = (a * a.adjoint() - b * b.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  d.symmetry_dev = (a * b.transpose() - b * a.transpose()).cwiseAbs().maxCoeff();
  d.passed = d.unitarity_dev <= tol && d.symmetry_dev <= tol;
  return d;
}

RMatrix symplectic_matrix(const BogoliubovTransform& t) {
  const auto n = static_cast<Eigen::Index>(t.n_modes());
  const CMatrix sum = t.a() + t.b();
  const CMatrix diff = t.a() - t.b();
  RMatrix s(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      s(2 * i, 2 * j) = sum(i, j).real();
      s(2 * i, 2 * j + 1) = -diff(i, j).imag();
      s(2 * i + 1, 2 * j) = sum(i, j).imag();
      s(2 * i + 1, 2 * j + 1) = diff(i, j).real();
    }
  }
  return s;
}

RMatrix symplectic_form(std::size_t n_modes) {
  const auto n = static_cast<Eigen::Index>(n_modes);
  RMatrix omega = RMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

double max_abs_difference(const BogoliubovTransform& x, const BogoliubovTransform& y) {
  if (x.n_modes() != y.n_modes()) {
    throw std::invalid_argument("max_abs_difference: mode count mismatch");
  }
  return std::max((x.a() - y.a()).cwiseAbs().maxCoeff(), (x.b() - y.b()).cwiseAbs().maxCoeff());
}

}  // namespace cvclone
