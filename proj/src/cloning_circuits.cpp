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

#include "cvclone/cloning_circuits.hpp"

#include <cmath>
#include <sstream>

#include "cvclone/optical_elements.hpp"

namespace cvclone {

namespace {

constexpr std::size_t kA = 0;
constexpr std::size_t kB = 1;
constexpr std::size_t kC = 2;

const double kSqrt2 = std::sqrt(2.0);

void check_gamma(double gamma) {
  if (!std::isfinite(gamma)) {
    throw std::invalid_argument("gamma must be finite");
  }
  if (std::abs(gamma) > kMaxAbsGamma) {
    throw std::range_error("|gamma| must not exceed " + std::to_string(kMaxAbsGamma));
  }
}

void check_sym(std::size_t n, std::size_t m) {
  if (n < 1) {
    throw std::invalid_argument("symmetric cloner needs N >= 1");
  }
  if (m < n) {
    throw std::invalid_argument("symmetric cloner needs M >= N (got N=" + std::to_string(n) +
                                ", M=" + std::to_string(m) + ")");
  }
}

}  // namespace

void validate(const ClonerSpec& spec) {
  if (const auto* asym = std::get_if<Asym1to2>(&spec.variant)) {
    check_gamma(asym->gamma);
  } else {
    const auto& sym = std::get<SymNtoM>(spec.variant);
    check_sym(sym.n, sym.m);
    if (spec.factorized) {
      throw std::invalid_argument("factorized construction applies to the asymmetric cloner only");
    }
  }
}

std::string describe(const ClonerSpec& spec) {
  std::ostringstream os;
  if (const auto* asym = std::get_if<Asym1to2>(&spec.variant)) {
    os << "asym 1->2 gamma=" << asym->gamma << (spec.factorized ? " (factorized)" : "");
  } else {
    const auto& sym = std::get<SymNtoM>(spec.variant);
    os << "sym " << sym.n << "->" << sym.m;
  }
  return os.str();
}

BogoliubovTransform asym_direct(double gamma) {
  check_gamma(gamma);
  const double ep = std::exp(gamma) / kSqrt2;
  const double em = std::exp(-gamma) / kSqrt2;
  CMatrix a = CMatrix::Zero(3, 3);
  CMatrix b = CMatrix::Zero(3, 3);
  // a_out = c + e^g/sqrt2 (a - b^+)
  a(kA, kA) = ep;
  a(kA, kC) = 1.0;
  b(kA, kB) = -ep;
  // b_out = -sqrt2 sinh(g) a^+ + sqrt2 cosh(g) b - c^+
  a(kB, kB) = kSqrt2 * std::cosh(gamma);
  b(kB, kA) = -kSqrt2 * std::sinh(gamma);
  b(kB, kC) = -1.0;
  // c_out = c - e^-g/sqrt2 (a + b^+)
  a(kC, kA) = -em;
  a(kC, kC) = 1.0;
  b(kC, kB) = -em;
  return {std::move(a), std::move(b)};
}

FactorizationParams asym_params(double gamma) {
  check_gamma(gamma);
  const double e2 = std::exp(2.0 * gamma);
  FactorizationParams p;
  // atan maps onto (-pi/2, pi/2); with a positive argument w lands in [0, pi/2].
  p.w = std::atan(e2);
  p.v = std::atanh(std::sqrt(1.0 + e2 * e2) / (1.0 + e2));
  p.u = -std::atan(kSqrt2 * std::sinh(gamma)) + 0.0;  // + 0.0 turns -0 into 0
  return p;
}

BogoliubovTransform asym_factorized(double gamma) {
  const FactorizationParams p = asym_params(gamma);
  const auto bs1 = beam_splitter(p.u, ModeLabel(kA, "a"), ModeLabel(kC, "c"), 3);
  const auto amp = nopa(p.v, ModeLabel(kC, "c"), ModeLabel(kB, "b"), 3);
  const auto bs2 = beam_splitter(p.w, ModeLabel(kA, "a"), ModeLabel(kC, "c"), 3);
  return compose(bs2, compose(amp, bs1));
}

BogoliubovTransform sym_1_to_m(std::size_t m) { return sym_n_to_m(1, m); }

BogoliubovTransform sym_n_to_m(std::size_t n, std::size_t m) {
  check_sym(n, m);
  const MachineLayout layout = machine_layout(ClonerSpec::symmetric(n, m));
  const std::size_t total = layout.modes.size();

  const auto collect = collect_chain(layout.signals, total);

  const double gain = static_cast<double>(m) / static_cast<double>(n);
  const auto amplify = nopa(nopa_parameter_for_gain(gain), layout.modes[0], layout.modes[n], total);

  std::vector<ModeLabel> split_modes{layout.modes[0]};
  for (std::size_t j = n + 1; j < total; ++j) {
    split_modes.push_back(layout.modes[j]);
  }
  const auto distribute = distribute_chain(split_modes, total);

  return compose(distribute, compose(amplify, collect));
}

MachineLayout machine_layout(const ClonerSpec& spec) {
  validate(spec);
  MachineLayout layout;
  if (std::holds_alternative<Asym1to2>(spec.variant)) {
    layout.modes = {ModeLabel(kA, "a"), ModeLabel(kB, "b"), ModeLabel(kC, "c")};
    layout.signals = {layout.modes[kC]};
    layout.clones = {layout.modes[kA], layout.modes[kC]};
    layout.anticlone = layout.modes[kB];
    return layout;
  }
  const auto& sym = std::get<SymNtoM>(spec.variant);
  for (std::size_t k = 0; k < sym.n; ++k) {
    layout.modes.emplace_back(k, "c_" + std::to_string(k + 1));
  }
  layout.modes.emplace_back(sym.n, "b");
  for (std::size_t j = 1; j < sym.m; ++j) {
    layout.modes.emplace_back(sym.n + j, "a_" + std::to_string(j));
  }
  layout.signals.assign(layout.modes.begin(), layout.modes.begin() + static_cast<std::ptrdiff_t>(sym.n));
  for (std::size_t j = 1; j < sym.m; ++j) {
    layout.clones.push_back(layout.modes[sym.n + j]);
  }
  // The last clone leaves the splitter chain in the signal slot (e_M).
  layout.clones.emplace_back(0, "e_" + std::to_string(sym.m));
  layout.anticlone = layout.modes[sym.n];
  return layout;
}

Machine build_machine(const ClonerSpec& spec) {
  MachineLayout layout = machine_layout(spec);
  if (const auto* asym = std::get_if<Asym1to2>(&spec.variant)) {
    auto t = spec.factorized ? asym_factorized(asym->gamma) : asym_direct(asym->gamma);
    return {spec, std::move(layout), std::move(t)};
  }
  const auto& sym = std::get<SymNtoM>(spec.variant);
  return {spec, std::move(layout), sym_n_to_m(sym.n, sym.m)};
}

}  // namespace cvclone
