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
#include <string>
#include <vector>

#include "cvclone/bogoliubov.hpp"

namespace cvclone {

struct SuiteResult {
  std::string name;
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::optional<double> tolerance;  // replaces every per-suite tolerance
  bool oracle = false;
  std::size_t cutoff = 14;
};

/// 41 evenly spaced points in [-1, 1].
std::vector<double> gamma_grid();

/// (N, M) pairs exercised by the symmetric suites.
std::vector<std::pair<std::size_t, std::size_t>> symmetric_cases();

/// Coherent amplitudes used for the fidelity-invariance checks.
std::vector<Complex> invariance_amplitudes();

struct OracleComparison {
  double gamma = 0.0;
  Complex xi;
  std::size_t cutoff = 0;
  double fidelity_fock_a = 0.0;
  double fidelity_fock_c = 0.0;
  double fidelity_gauss_a = 0.0;
  double fidelity_gauss_c = 0.0;

  double max_dev() const;
};

/// Clone fidelities of the asymmetric cloner from the truncated-Fock
/// simulation, next to the Gaussian-pipeline values.
std::vector<OracleComparison> oracle_compare(double gamma, std::span<const Complex> xis, std::size_t cutoff);

std::vector<SuiteResult> run_gaussian_suites(const std::optional<double>& tolerance_override);

/// Agreement at `cutoff` plus convergence from cutoff 10 upward.
std::vector<SuiteResult> run_oracle_suites(std::size_t cutoff, const std::optional<double>& tolerance_override);

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace cvclone
