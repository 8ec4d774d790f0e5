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
#include <string>
#include <variant>
#include <vector>

#include "cvclone/bogoliubov.hpp"

namespace cvclone {

/// Asymmetric 1 -> 2 cloner. gamma = 0 is the symmetric machine; the clone in
/// mode a carries e^{2 gamma}/2 chaotic photons, the clone in mode c e^{-2 gamma}/2.
struct Asym1to2 {
  double gamma = 0.0;
};

/// Symmetric N -> M cloner of coherent states.
struct SymNtoM {
  std::size_t n = 1;
  std::size_t m = 1;
};

struct ClonerSpec {
  std::variant<Asym1to2, SymNtoM> variant;
  bool factorized = false;  // Asym only: build from BS-NOPA-BS instead of the closed form

  static ClonerSpec asymmetric(double gamma, bool factorized = false) {
    return {Asym1to2{gamma}, factorized};
  }
  static ClonerSpec symmetric(std::size_t n, std::size_t m) { return {SymNtoM{n, m}, false}; }
};

/// Throws std::invalid_argument / std::range_error for an unbuildable spec.
void validate(const ClonerSpec& spec);

std::string describe(const ClonerSpec& spec);

/// Beam-splitter angles u (first), w (second) and the NOPA squeeze v of the
/// Mach-Zehnder realization of the asymmetric cloner.
struct FactorizationParams {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

/// |gamma| beyond this is rejected; e^{2 gamma} stops being useful in double.
inline constexpr double kMaxAbsGamma = 20.0;

/// Closed-form Heisenberg map of the asymmetric cloner on modes (a, b, c).
BogoliubovTransform asym_direct(double gamma);

FactorizationParams asym_params(double gamma);

/// BS(u) on (a, c), then NOPA(v) on (c, b), then BS(w) on (a, c).
BogoliubovTransform asym_factorized(double gamma);

/// NOPA with gain M on (c, b) followed by an M-port splitter. Modes: c (0),
/// b (1), a_1..a_{M-1} (2..M).
BogoliubovTransform sym_1_to_m(std::size_t m);

/// Collect N copies, amplify by M/N, distribute over M outputs. Modes:
/// c_1..c_N (0..N-1), idler b (N), ancillas a_1..a_{M-1} (N+1..N+M-1).
BogoliubovTransform sym_n_to_m(std::size_t n, std::size_t m);

/// Which modes of a machine are inputs, clones and the phase-conjugate output.
struct MachineLayout {
  std::vector<ModeLabel> modes;
  std::vector<ModeLabel> signals;
  std::vector<ModeLabel> clones;
  std::optional<ModeLabel> anticlone;
};

MachineLayout machine_layout(const ClonerSpec& spec);

struct Machine {
  ClonerSpec spec;
  MachineLayout layout;
  BogoliubovTransform transform;
};

Machine build_machine(const ClonerSpec& spec);

}  // namespace cvclone
