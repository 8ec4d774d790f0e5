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
#include <span>

#include "cvclone/bogoliubov.hpp"

namespace cvclone {

/// Lossless beam splitter with mixing angle theta. On (first, second):
///   first_out  =  cos(theta) first + sin(theta) second
///   second_out = -sin(theta) first + cos(theta) second
BogoliubovTransform beam_splitter(double theta);
BogoliubovTransform beam_splitter(double theta, const ModeLabel& first, const ModeLabel& second,
                                  std::size_t total);

/// Non-degenerate parametric amplifier (two-mode squeezer). On (signal, idler):
///   signal_out = cosh(r) signal - sinh(r) idler^+
///   idler_out  = cosh(r) idler  - sinh(r) signal^+
BogoliubovTransform nopa(double r);
BogoliubovTransform nopa(double r, const ModeLabel& signal, const ModeLabel& idler, std::size_t total);

/// Squeeze parameter giving amplitude gain sqrt(gain), i.e. cosh(r)^2 = gain.
double nopa_parameter_for_gain(double gain);

/// Chain of N-1 beam splitters concentrating N modes into modes[0]. Identical
/// coherent inputs xi leave sqrt(N) xi in modes[0] and vacuum elsewhere.
BogoliubovTransform collect_chain(std::size_t n);
BogoliubovTransform collect_chain(std::span<const ModeLabel> modes, std::size_t total);

/// Chain of M-1 beam splitters splitting modes[0] equally over all M modes.
/// modes[1..M-1] are the ancillas a_1..a_{M-1}; splitter j sends 1/(M-j+1) of
/// the remaining signal power into a_j and the rest stays in modes[0].
BogoliubovTransform distribute_chain(std::size_t m);
BogoliubovTransform distribute_chain(std::span<const ModeLabel> modes, std::size_t total);

}  // namespace cvclone
