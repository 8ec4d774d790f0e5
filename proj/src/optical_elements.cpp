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

#include "cvclone/optical_elements.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace cvclone {

namespace {

void require_distinct(const ModeLabel& first, const ModeLabel& second, const char* what) {
  if (first.index == second.index) {
    throw std::invalid_argument(std::string(what) + ": modes must be distinct (both " +
                                std::to_string(first.index) + ")");
  }
}

std::vector<ModeLabel> default_modes(std::size_t n) {
  std::vector<ModeLabel> modes;
  modes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    modes.emplace_back(i);
  }
  return modes;
}

}  // namespace

BogoliubovTransform beam_splitter(double theta) {
  CMatrix a(2, 2);
  a << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return {std::move(a), CMatrix::Zero(2, 2)};
}

BogoliubovTransform beam_splitter(double theta, const ModeLabel& first, const ModeLabel& second,
                                  std::size_t total) {
  require_distinct(first, second, "beam_splitter");
  const std::array<ModeLabel, 2> targets{first, second};
  return embed(beam_splitter(theta), targets, total);
}

BogoliubovTransform nopa(double r) {
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  CMatrix a(2, 2);
  a << ch, 0.0, 0.0, ch;
  CMatrix b(2, 2);
  b << 0.0, -sh, -sh, 0.0;
  return {std::move(a), std::move(b)};
}

BogoliubovTransform nopa(double r, const ModeLabel& signal, const ModeLabel& idler, std::size_t total) {
  require_distinct(signal, idler, "nopa");
  const std::array<ModeLabel, 2> targets{signal, idler};
  return embed(nopa(r), targets, total);
}

double nopa_parameter_for_gain(double gain) {
  if (!(gain >= 1.0)) {
    throw std::invalid_argument("nopa_parameter_for_gain: gain must be >= 1");
  }
  return std::acosh(std::sqrt(gain));
}

BogoliubovTransform collect_chain(std::size_t n) {
  const auto modes = default_modes(n);
  return collect_chain(modes, n);
}

BogoliubovTransform collect_chain(std::span<const ModeLabel> modes, std::size_t total) {
  if (modes.empty()) {
    throw std::invalid_argument("collect_chain: need at least one mode");
  }
  // Validates range and distinctness.
  BogoliubovTransform out = embed(identity_transform(modes.size()), modes, total);
  // Splitter j merges the accumulated mode d_j (weight j) with c_{j+1}.
  for (std::size_t j = 1; j < modes.size(); ++j) {
    const double theta = std::atan(1.0 / std::sqrt(static_cast<double>(j)));
    out = compose(beam_splitter(theta, modes[0], modes[j], total), out);
  }
  return out;
}

BogoliubovTransform distribute_chain(std::size_t m) {
  const auto modes = default_modes(m);
  return distribute_chain(modes, m);
}

BogoliubovTransform distribute_chain(std::span<const ModeLabel> modes, std::size_t total) {
  if (modes.empty()) {
    throw std::invalid_argument("distribute_chain: need at least one mode");
  }
  BogoliubovTransform out = embed(identity_transform(modes.size()), modes, total);
  const std::size_t m = modes.size();
  for (std::size_t j = 1; j < m; ++j) {
    // a_j,out = sqrt(1/(M-j+1)) c_j + sqrt((M-j)/(M-j+1)) a_j,in
    const double remaining = static_cast<double>(m - j + 1);
    const double theta = std::asin(std::sqrt(1.0 / remaining));
    out = compose(beam_splitter(theta, modes[j], modes[0], total), out);
  }
  return out;
}

}  // namespace cvclone
