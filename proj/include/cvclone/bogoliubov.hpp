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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cvclone {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Default tolerance for the symplectic invariants of small, analytically
/// exact circuits.
inline constexpr double kSymplecticTol = 1e-10;

/// Raised when a physical invariant (symplecticity, unit gain, isotropy,
/// truncation leakage) does not hold.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position of a bosonic mode inside a transform or state, with an optional
/// human-readable tag such as "a_in" or "c_2".
struct ModeLabel {
  std::size_t index = 0;
  std::string name;

  ModeLabel() = default;
  ModeLabel(std::size_t i) : index(i) {}  // NOLINT(google-explicit-constructor)
  ModeLabel(std::size_t i, std::string n) : index(i), name(std::move(n)) {}

  friend bool operator==(const ModeLabel& l, const ModeLabel& r) { return l.index == r.index; }
};

/// Linear map on mode operators, a_out = A a_in + B a_in^dagger.
///
/// Construction only checks shapes. Whether (A, B) preserves the canonical
/// commutators is reported by check_symplectic().
class BogoliubovTransform {
 public:
  BogoliubovTransform(CMatrix a, CMatrix b);

  std::size_t n_modes() const { return static_cast<std::size_t>(a_.rows()); }
  const CMatrix& a() const { return a_; }
  const CMatrix& b() const { return b_; }

 private:
  CMatrix a_;
  CMatrix b_;
};

BogoliubovTransform identity_transform(std::size_t n_modes);

/// Heisenberg-picture composition: `first` acts on the input modes, then
/// `second` acts on its outputs.
BogoliubovTransform compose(const BogoliubovTransform& second, const BogoliubovTransform& first);

/// Lifts `t` onto `total` modes, acting on `targets` (in order) and as the
/// identity elsewhere.
BogoliubovTransform embed(const BogoliubovTransform& t, std::span<const ModeLabel> targets,
                          std::size_t total);

struct SymplecticDiagnostics {
  double unitarity_dev = 0.0;  // max |A A^+ - B B^+ - I|
  double symmetry_dev = 0.0;   // max |A B^T - B A^T|
  bool passed = false;

  double max_dev() const { return std::max(unitarity_dev, symmetry_dev); }
};

SymplecticDiagnostics check_symplectic(const BogoliubovTransform& t, double tol = kSymplecticTol);

/// Real 2n x 2n matrix acting on interleaved quadratures (x1, p1, x2, p2, ...)
/// with x = (a + a^+)/sqrt2, p = (a - a^+)/(i sqrt2).
RMatrix symplectic_matrix(const BogoliubovTransform& t);

/// Block-diagonal symplectic form with blocks [[0, 1], [-1, 0]].
RMatrix symplectic_form(std::size_t n_modes);

/// Largest elementwise difference between two transforms of equal size.
double max_abs_difference(const BogoliubovTransform& x, const BogoliubovTransform& y);

}  // namespace cvclone
