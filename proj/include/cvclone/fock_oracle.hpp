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

// Truncated number-basis simulator used as an independent check of the
// Gaussian pipeline. Generators are built from truncated ladder operators and
// exponentiated exactly, so evolution is unitary on the truncated space;
// truncation error shows up as population in the top Fock level, which is
// measured and gated.
//
// Covers three-mode (a, b, c) machines only. Dense N -> M simulation would
// need (cutoff+1)^(N+M) amplitudes.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "cvclone/bogoliubov.hpp"

namespace cvclone::fock {

using SparseOperator = Eigen::SparseMatrix<Complex>;
using CVector = Eigen::VectorXcd;

inline constexpr std::size_t kDefaultDimensionBudget = 200000;
inline constexpr double kDefaultLeakageThreshold = 1e-2;

class FockSpace {
 public:
  FockSpace(std::size_t n_modes, std::size_t cutoff, std::size_t budget = kDefaultDimensionBudget);

  std::size_t n_modes() const { return n_modes_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t levels() const { return cutoff_ + 1; }
  std::size_t dimension() const { return dimension_; }

  /// Mode 0 is the most significant digit.
  std::size_t index(std::span<const std::size_t> occupations) const;
  std::vector<std::size_t> occupations(std::size_t index) const;

  friend bool operator==(const FockSpace& l, const FockSpace& r) {
    return l.n_modes_ == r.n_modes_ && l.cutoff_ == r.cutoff_;
  }

 private:
  std::size_t n_modes_;
  std::size_t cutoff_;
  std::size_t dimension_;
};

class FockState {
 public:
  FockState(FockSpace space, CVector amplitudes);

  const FockSpace& space() const { return space_; }
  const CVector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  FockSpace space_;
  CVector amplitudes_;
};

enum class GeneratorKind {
  U,  // i(second first^+ - second^+ first): beam-splitter mixing
  V,  // i(first second - first^+ second^+): two-mode squeezing
  Y,  // same form as V; kept distinct to mirror the cloner's ancilla squeezer
};

/// Hermitian generator on the pair (first, second) of `space`.
SparseOperator generator_matrix(GeneratorKind kind, const FockSpace& space, const ModeLabel& first,
                                const ModeLabel& second);

/// exp(-i theta H) for Hermitian H, computed per connected block of H by
/// eigendecomposition.
SparseOperator exp_hermitian(const SparseOperator& h, double theta);

/// exp[-i(U + V)] exp(-i chi Y) on modes (a, b, c) with chi = gamma + ln2/2.
SparseOperator cloning_unitary_fock(double gamma, const FockSpace& space);

/// Max |(C^+ C - I)_{jk}| over basis states with at most `max_total_photons`.
double unitarity_deviation(const SparseOperator& op, const FockSpace& space, std::size_t max_total_photons);

/// Truncated coherent-state vector (not renormalized).
CVector coherent_vector(std::size_t cutoff, Complex xi);

/// Product of (renormalized) truncated coherent states.
FockState product_coherent_state(const FockSpace& space, std::span<const Complex> amplitudes);

FockState evolve(const SparseOperator& op, const FockState& s);

CMatrix reduced_density_matrix(const FockState& s, const ModeLabel& mode);

/// Population of the highest retained Fock level of `mode`.
double top_level_population(const FockState& s, const ModeLabel& mode);

/// <a_mode>.
Complex mean_amplitude(const FockState& s, const ModeLabel& mode);

/// <xi| rho_mode |xi>. Throws InvariantViolation when the truncated coherent
/// vector has lost more than 1e-6 of its norm, or when any mode's top-level
/// population exceeds `leakage_threshold`.
double fidelity_fock(const FockState& s, const ModeLabel& clone, Complex xi,
                     double leakage_threshold = kDefaultLeakageThreshold);

}  // namespace cvclone::fock
