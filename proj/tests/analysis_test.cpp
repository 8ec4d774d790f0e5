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

#include "cvclone/analysis.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cvclone/optical_elements.hpp"
#include "test_util.hpp"

using namespace cvclone;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid41() {
  std::vector<double> g;
  for (int i = 0; i <= 40; ++i) {
    g.push_back(-1.0 + 0.05 * i);
  }
  return g;
}

GaussianState thermal_coherent(double n, Complex xi) {
  RVector mean(2);
  mean << std::sqrt(2.0) * xi.real(), std::sqrt(2.0) * xi.imag();
  return {mean, (n + 0.5) * RMatrix::Identity(2, 2)};
}

// Symmetric N->M machines exercised throughout.
const std::array<std::pair<std::size_t, std::size_t>, 8> kSym{
    {{1, 1}, {1, 2}, {1, 3}, {1, 6}, {2, 3}, {3, 5}, {2, 5}, {4, 4}}};

}  // namespace

TEST(ChaoticPhotons, AsymmetricCloner) {
  for (double g : grid41()) {
    const auto t = asym_direct(g);
    EXPECT_NEAR(chaotic_photons(t, 0), 0.5 * std::exp(2 * g), 1e-14);
    EXPECT_NEAR(chaotic_photons(t, 2), 0.5 * std::exp(-2 * g), 1e-14);
  }
  EXPECT_THROW(chaotic_photons(asym_direct(0.0), 3), std::out_of_range);
}

TEST(ChaoticPhotons, SymmetricCloners) {
  for (auto [n, m] : kSym) {
    const Machine machine = build_machine(ClonerSpec::symmetric(n, m));
    const double expected = (static_cast<double>(m) - n) / (static_cast<double>(m) * n);
    for (const auto& clone : machine.layout.clones) {
      EXPECT_NEAR(chaotic_photons(machine.transform, clone), expected, 1e-14);
    }
  }
}

TEST(NoiseProduct, AsymmetricClonerSaturatesBound) {
  EXPECT_NEAR(noise_product(asym_direct(0.0), 0, 2), 0.25, 1e-15);
  EXPECT_NEAR(noise_product(asym_direct(0.7), 0, 2), 0.25, 1e-12);
  for (double g : grid41()) {
    EXPECT_NEAR(noise_product(asym_direct(g), 0, 2), 0.25, 1e-12);
  }
}

TEST(NoiseProduct, ExtraAmplifierExceedsBound) {
  // Clone a passes through an additional NOPA with a fresh vacuum idler.
  const std::array<ModeLabel, 3> abc{ModeLabel(0), ModeLabel(1), ModeLabel(2)};
  const auto cloner = embed(asym_direct(0.2), abc, 4);
  const auto noisy = compose(nopa(0.3, 0, 3, 4), cloner);
  ASSERT_TRUE(check_symplectic(noisy).passed);
  EXPECT_GT(noise_product(noisy, 0, 2), 0.25 + 1e-3);
}

TEST(PhaseCovariance, AsymmetricClonerHasNoDefect) {
  for (double g : {-0.9, 0.0, 0.6}) {
    EXPECT_EQ(phase_covariance_defect(asym_direct(g), 0, 2), Complex(0.0));
    EXPECT_EQ(phase_covariance_defect(asym_direct(g), 2, 2), Complex(0.0));
  }
}

TEST(PhaseCovariance, SymmetricTwoToThree) {
  const Machine machine = build_machine(ClonerSpec::symmetric(2, 3));
  for (const auto& clone : machine.layout.clones) {
    EXPECT_LE(std::abs(phase_covariance_defect(machine.transform, clone, machine.layout.signals)), 1e-12);
  }
}

TEST(PhaseCovariance, SingleModeSqueezingIsDetected) {
  const auto squeezed = compose(testutil::single_mode_squeezer(0.4, 0, 3), asym_direct(0.0));
  EXPECT_GT(std::abs(phase_covariance_defect(squeezed, 0, 2)), 0.1);
}

TEST(QFunction, PureCoherentPeak) {
  EXPECT_NEAR(q_function(thermal_coherent(0.0, Complex(0.3, 0.1)), Complex(0.3, 0.1)), 1 / kPi, 1e-15);
}

TEST(QFunction, SymmetricClonePeakAndWidth) {
  const auto s = thermal_coherent(0.5, Complex(1.0, 0.0));
  EXPECT_NEAR(kPi * q_function(s, Complex(1.0)), 2.0 / 3.0, 1e-15);
  // |alpha - xi|^2 = 3/2 equals the Gaussian width n_ch + 1.
  const Complex alpha = Complex(1.0) + std::polar(std::sqrt(1.5), 0.9);
  EXPECT_NEAR(q_function(s, Complex(1.0)) / q_function(s, alpha), std::exp(1.0), 1e-12);
}

TEST(QFunction, RejectsAnisotropicNoise) {
  RMatrix cov(2, 2);
  cov << 1.0, 0.0, 0.0, 0.3;
  const GaussianState squeezed(RVector::Zero(2), cov);
  EXPECT_THROW(q_function(squeezed, Complex(0.0)), InvariantViolation);
  EXPECT_THROW(q_function(vacuum_state(2), Complex(0.0)), std::invalid_argument);
}

TEST(FidelityCoherent, SymmetricCloner) {
  for (std::size_t clone : {0u, 2u}) {
    const std::vector<Complex> in{Complex(0.0), Complex(0.0), Complex(0.4, -0.2)};
    const auto out = apply_to_gaussian(asym_direct(0.0), coherent_vacuum_input(in));
    EXPECT_NEAR(fidelity_coherent(reduce(out, clone), Complex(0.4, -0.2)), 2.0 / 3.0, 1e-14);
  }
}

TEST(FidelityCoherent, AsymmetricAtLnTwoOverTwo) {
  // e^{2 gamma} = 2: F_a = 2/(2+2), F_c = 2/(1/2+2).
  const auto r = clone_report(ClonerSpec::asymmetric(std::log(2.0) / 2), Complex(0.5));
  EXPECT_NEAR(r[0].fidelity, 0.5, 1e-14);
  EXPECT_NEAR(r[1].fidelity, 0.8, 1e-14);
}

TEST(FidelityCoherent, OneToMBound) {
  for (std::size_t m : {2u, 3u, 5u}) {
    const double md = static_cast<double>(m);
    for (const auto& c : clone_report(ClonerSpec::symmetric(1, m), Complex(-0.3, 1.1))) {
      EXPECT_NEAR(c.fidelity, md / (2 * md - 1), 1e-14) << "M=" << m;
    }
  }
}

TEST(FidelityCoherent, RejectsNonUnitGain) {
  EXPECT_THROW(fidelity_coherent(vacuum_state(1), Complex(1.0)), InvariantViolation);
  RMatrix cov(2, 2);
  cov << 0.5, 0.1, 0.1, 0.5;
  EXPECT_THROW(fidelity_coherent(GaussianState(RVector::Zero(2), cov), Complex(0.0)), InvariantViolation);
}

TEST(CloneReport, SymmetricOneToTwo) {
  const auto r = clone_report(ClonerSpec::asymmetric(0.0), Complex(1.0, 0.0));
  ASSERT_EQ(r.size(), 2u);
  for (const auto& c : r) {
    EXPECT_NEAR(c.fidelity, 2.0 / 3.0, 1e-14);
    EXPECT_NEAR(c.n_chaotic, 0.5, 1e-14);
    EXPECT_NEAR(std::abs(c.output_amplitude - Complex(1.0)), 0.0, 1e-14);
  }
  EXPECT_EQ(r[0].clone_mode.name, "a");
  EXPECT_EQ(r[1].clone_mode.name, "c");
}

TEST(CloneReport, ThreeToFive) {
  const auto r = clone_report(ClonerSpec::symmetric(3, 5), Complex(0.2, 0.9));
  ASSERT_EQ(r.size(), 5u);
  for (const auto& c : r) {
    EXPECT_NEAR(c.fidelity, 15.0 / 17.0, 1e-14);
    EXPECT_NEAR(c.fidelity, r.front().fidelity, 1e-14);
  }
}

TEST(CloneReport, IdentityMachine) {
  const auto r = clone_report(ClonerSpec::symmetric(1, 1), Complex(0.3));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].fidelity, 1.0, 1e-15);
  EXPECT_NEAR(r[0].n_chaotic, 0.0, 1e-15);
}

TEST(CloneReport, AnticlonePhotonsExposed) {
  // b_out = sqrt2 b - c^+ at gamma = 0 carries |xi|^2 + 1 photons.
  const auto rep = analyze_machine(ClonerSpec::asymmetric(0.0), Complex(1.0));
  ASSERT_TRUE(rep.diagnostics.anticlone_photons.has_value());
  EXPECT_NEAR(*rep.diagnostics.anticlone_photons, 1.0 + 1.0, 1e-13);
  ASSERT_TRUE(rep.diagnostics.factorization_dev.has_value());
  EXPECT_LE(*rep.diagnostics.factorization_dev, 1e-12);
}

// Property: fidelity does not depend on the coherent amplitude.
TEST(AnalysisProperty, FidelityInvariantOverAmplitude) {
  const std::array<Complex, 5> xis{Complex(0.0), Complex(1.0), Complex(0.0, 2.0), Complex(-1.5, 0.5),
                                   Complex(3.0, -2.0)};
  std::vector<ClonerSpec> specs{ClonerSpec::asymmetric(-0.6), ClonerSpec::asymmetric(0.0),
                                ClonerSpec::asymmetric(0.85, true)};
  for (auto [n, m] : kSym) {
    specs.push_back(ClonerSpec::symmetric(n, m));
  }
  for (const auto& spec : specs) {
    const auto ref = clone_report(spec, xis[0]);
    for (const auto& xi : xis) {
      const auto r = clone_report(spec, xi);
      for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_NEAR(r[i].fidelity, ref[i].fidelity, 1e-10) << describe(spec);
      }
    }
  }
}

// Property: F (n + 1) = 1 and pi Q(xi) = F for every clone.
TEST(AnalysisProperty, ReportIdentities) {
  std::vector<ClonerSpec> specs;
  for (double g : grid41()) {
    specs.push_back(ClonerSpec::asymmetric(g));
  }
  for (auto [n, m] : kSym) {
    specs.push_back(ClonerSpec::symmetric(n, m));
  }
  for (const auto& spec : specs) {
    for (const auto& c : clone_report(spec, Complex(0.7, -1.3))) {
      const auto res = residuals(c);
      EXPECT_LE(res.fidelity_photon_identity, 1e-10) << describe(spec);
      EXPECT_LE(res.q_identity, 1e-10) << describe(spec);
      EXPECT_LE(res.max(), 1e-10) << describe(spec);
    }
  }
}

TEST(AnalysisProperty, SwapSymmetryAndMonotonicity) {
  double prev_a = 2.0;
  double prev_c = -1.0;
  for (double g : grid41()) {
    const auto r = clone_report(ClonerSpec::asymmetric(g), Complex(0.4));
    const auto mirrored = clone_report(ClonerSpec::asymmetric(-g), Complex(0.4));
    EXPECT_NEAR(r[0].fidelity, mirrored[1].fidelity, 1e-15);
    EXPECT_LT(r[0].fidelity, prev_a);
    EXPECT_GT(r[1].fidelity, prev_c);
    prev_a = r[0].fidelity;
    prev_c = r[1].fidelity;
  }
}

TEST(AnalysisProperty, NoiseProductFromCovariances) {
  for (double g : grid41()) {
    const auto r = clone_report(ClonerSpec::asymmetric(g), Complex(0.0, 1.0));
    EXPECT_NEAR(r[0].n_chaotic * r[1].n_chaotic, 0.25, 1e-12);
  }
}
