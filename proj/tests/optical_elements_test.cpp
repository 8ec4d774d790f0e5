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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cvclone/gaussian_state.hpp"

using namespace cvclone;

namespace {

// Amplitude response of a passive chain: out = A in.
std::vector<Complex> propagate(const BogoliubovTransform& t, const std::vector<Complex>& in) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(in.size()));
  for (std::size_t i = 0; i < in.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = in[i];
  }
  const Eigen::VectorXcd out = t.a() * v + t.b() * v.conjugate();
  return {out.data(), out.data() + out.size()};
}

// Collection interferometer written out splitter by splitter:
//   d_{j+1}     = sqrt(j/(j+1)) d_j + sqrt(1/(j+1)) c_{j+1}
//   c_{j+1,out} = sqrt(1/(j+1)) d_j - sqrt(j/(j+1)) c_{j+1}
std::vector<Complex> collect_by_hand(const std::vector<Complex>& c) {
  std::vector<Complex> out(c.size());
  Complex d = c[0];
  for (std::size_t j = 1; j < c.size(); ++j) {
    const double jj = static_cast<double>(j);
    const Complex next = std::sqrt(jj / (jj + 1)) * d + std::sqrt(1 / (jj + 1)) * c[j];
    out[j] = std::sqrt(1 / (jj + 1)) * d - std::sqrt(jj / (jj + 1)) * c[j];
    d = next;
  }
  out[0] = d;
  return out;
}

// Splitting interferometer written out splitter by splitter; signal in
// slot 0, ancillas a_1..a_{M-1} in slots 1..M-1:
//   a_j,out = sqrt(1/(M-j+1)) c_j + sqrt((M-j)/(M-j+1)) a_j,in
//   c_{j+1} = sqrt((M-j)/(M-j+1)) c_j - sqrt(1/(M-j+1)) a_j,in
std::vector<Complex> distribute_by_hand(const std::vector<Complex>& in) {
  const double m = static_cast<double>(in.size());
  std::vector<Complex> out(in.size());
  Complex c = in[0];
  for (std::size_t j = 1; j < in.size(); ++j) {
    const double r = m - static_cast<double>(j) + 1;
    out[j] = std::sqrt(1 / r) * c + std::sqrt((r - 1) / r) * in[j];
    c = std::sqrt((r - 1) / r) * c - std::sqrt(1 / r) * in[j];
  }
  out[0] = c;
  return out;
}

}  // namespace

TEST(BeamSplitter, ZeroAngleIsIdentity) {
  EXPECT_LE(max_abs_difference(beam_splitter(0.0), identity_transform(2)), 0.0);
}

TEST(BeamSplitter, QuarterTurnSwapsWithSign) {
  const auto t = beam_splitter(std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(t.a()(0, 1) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.a()(1, 0) - Complex(-1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.a()(0, 0)), 0.0, 1e-15);
}

TEST(BeamSplitter, BalancedSplitterCollectsSignal) {
  const Complex xi(0.4, -0.9);
  const auto out = propagate(beam_splitter(std::numbers::pi / 4), {xi, xi});
  EXPECT_NEAR(std::abs(out[0] - std::sqrt(2.0) * xi), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out[1]), 0.0, 1e-15);
}

TEST(BeamSplitter, RejectsDuplicateModes) {
  EXPECT_THROW(beam_splitter(0.2, 1, 1, 3), std::invalid_argument);
  EXPECT_THROW(nopa(0.2, 0, 0, 2), std::invalid_argument);
}

TEST(Nopa, ZeroSqueezeIsIdentity) { EXPECT_LE(max_abs_difference(nopa(0.0), identity_transform(2)), 0.0); }

TEST(Nopa, GainTwoCoefficients) {
  // c_1 = sqrt2 c - b^+
  const auto t = nopa(nopa_parameter_for_gain(2.0));
  EXPECT_NEAR(t.a()(0, 0).real(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.b()(0, 1).real(), -1.0, 1e-15);
  EXPECT_NEAR(t.b()(1, 0).real(), -1.0, 1e-15);
  EXPECT_TRUE(check_symplectic(t, 1e-14).passed);
}

TEST(Nopa, GainThreeHalvesCoefficients) {
  const auto t = nopa(nopa_parameter_for_gain(3.0 / 2.0));
  EXPECT_NEAR(t.a()(0, 0).real(), std::sqrt(1.5), 1e-15);
  EXPECT_NEAR(t.b()(0, 1).real(), -std::sqrt(0.5), 1e-15);
  EXPECT_THROW(nopa_parameter_for_gain(0.5), std::invalid_argument);
}

TEST(Nopa, InversePair) {
  for (double r : {0.1, 0.7, 1.5, 3.0}) {
    EXPECT_LE(max_abs_difference(compose(nopa(r), nopa(-r)), identity_transform(2)), 1e-12 * std::cosh(2 * r));
  }
}

TEST(CollectChain, SingleModeIsIdentity) {
  EXPECT_LE(max_abs_difference(collect_chain(1), identity_transform(1)), 0.0);
}

TEST(CollectChain, TwoCopies) {
  const Complex xi(0.25, 0.5);
  const auto out = propagate(collect_chain(2), {xi, xi});
  EXPECT_NEAR(std::abs(out[0] - std::sqrt(2.0) * xi), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out[1]), 0.0, 1e-15);
}

TEST(CollectChain, FourCopies) {
  const auto out = propagate(collect_chain(4), std::vector<Complex>(4, Complex(0.3)));
  const auto expected = collect_by_hand(std::vector<Complex>(4, Complex(0.3)));
  EXPECT_NEAR(std::abs(out[0] - Complex(0.6)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(expected[0] - Complex(0.6)), 0.0, 1e-12);
  for (std::size_t k = 1; k < 4; ++k) {
    EXPECT_NEAR(std::abs(out[k]), 0.0, 1e-12);
  }
}

TEST(CollectChain, MatchesSplitterFormulasOnArbitraryInputs) {
  // The collected mode matches exactly; each discarded port differs from the
  // written-out reflection by a sign, since the chain is built from rotations.
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<Complex> in(n);
    for (auto& z : in) {
      z = Complex(g(rng), g(rng));
    }
    const auto out = propagate(collect_chain(n), in);
    const auto ref = collect_by_hand(in);
    EXPECT_NEAR(std::abs(out[0] - ref[0]), 0.0, 1e-13);
    for (std::size_t k = 1; k < n; ++k) {
      EXPECT_NEAR(std::abs(out[k] + ref[k]), 0.0, 1e-13) << "n=" << n << " port " << k;
    }
  }
}

TEST(CollectChain, RejectsBadModeLists) {
  const std::vector<ModeLabel> none;
  const std::vector<ModeLabel> dup{0, 2, 0};
  const std::vector<ModeLabel> out_of_range{0, 5};
  EXPECT_THROW(collect_chain(none, 3), std::invalid_argument);
  EXPECT_THROW(collect_chain(dup, 3), std::invalid_argument);
  EXPECT_THROW(collect_chain(out_of_range, 3), std::out_of_range);
  EXPECT_THROW(distribute_chain(dup, 3), std::invalid_argument);
}

TEST(DistributeChain, SingleModeIsIdentity) {
  EXPECT_LE(max_abs_difference(distribute_chain(1), identity_transform(1)), 0.0);
}

TEST(DistributeChain, TwoOutputsBalanced) {
  const auto t = distribute_chain(2);
  EXPECT_NEAR(t.a()(0, 0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t.a()(1, 0).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(DistributeChain, ThreeOutputsUnitAmplitude) {
  const auto out = propagate(distribute_chain(3), {Complex(std::sqrt(3.0)), Complex(0.0), Complex(0.0)});
  for (const auto& z : out) {
    EXPECT_NEAR(std::abs(z - Complex(1.0)), 0.0, 1e-15);
  }
}

TEST(DistributeChain, MatchesSplitterFormulas) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t m = 1; m <= 7; ++m) {
    std::vector<Complex> in(m);
    for (auto& z : in) {
      z = Complex(g(rng), g(rng));
    }
    const auto out = propagate(distribute_chain(m), in);
    const auto ref = distribute_by_hand(in);
    for (std::size_t k = 0; k < m; ++k) {
      EXPECT_NEAR(std::abs(out[k] - ref[k]), 0.0, 1e-13) << "m=" << m << " port " << k;
    }
  }
}

TEST(DistributeChain, SignalColumnIsUniform) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const auto t = distribute_chain(m);
    for (std::size_t k = 0; k < m; ++k) {
      EXPECT_NEAR(t.a()(static_cast<Eigen::Index>(k), 0).real(), 1 / std::sqrt(static_cast<double>(m)), 1e-14);
    }
  }
}

// Properties: passive chains have B = 0, conserve photon number, and are
// symplectic.
TEST(ChainProperty, PassiveAndSymplectic) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : {collect_chain(n), distribute_chain(n)}) {
      EXPECT_TRUE(t.b().isZero(0.0));
      EXPECT_TRUE(check_symplectic(t, 1e-10).passed);
      std::vector<Complex> in(n);
      for (auto& z : in) {
        z = Complex(g(rng), g(rng));
      }
      const GaussianState s = coherent_vacuum_input(in);
      EXPECT_NEAR(mean_photon_number(apply_to_gaussian(t, s)), mean_photon_number(s), 1e-10);
    }
  }
}

TEST(ChainProperty, DistributeThenUndoRecoversSignal) {
  // Passive chains are unitary: A^+ A = I, so splitting then recombining is lossless.
  for (std::size_t m = 1; m <= 6; ++m) {
    const CMatrix a = distribute_chain(m).a();
    EXPECT_LE((a.adjoint() * a - CMatrix::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff(), 1e-14);
    const CMatrix c = collect_chain(m).a();
    // Collecting the M equal clones puts everything back in slot 0.
    const Eigen::VectorXcd split = a.col(0);
    const Eigen::VectorXcd back = c * split;
    EXPECT_NEAR(std::abs(back(0) - Complex(1.0)), 0.0, 1e-14);
  }
}
