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

#include "cvclone/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "cvclone/analysis.hpp"
#include "cvclone/cloning_circuits.hpp"
#include "cvclone/fock_oracle.hpp"
#include "cvclone/gaussian_state.hpp"
#include "cvclone/optical_elements.hpp"

namespace cvclone {

namespace {

constexpr double kOracleTol = 5e-3;
constexpr std::size_t kOracleBaseCutoff = 10;

// Tracks the worst deviation of one suite and where it occurred.
class Worst {
 public:
  void update(double dev, const std::string& where) {
    if (!std::isfinite(dev) || dev > max_) {
      max_ = std::isfinite(dev) ? dev : std::numeric_limits<double>::infinity();
      where_ = where;
    }
  }
  double max() const { return max_; }
  const std::string& where() const { return where_; }

 private:
  double max_ = 0.0;
  std::string where_;
};

SuiteResult finish(std::string name, const Worst& worst, double tolerance, const std::optional<double>& override_tol) {
  SuiteResult r;
  r.name = std::move(name);
  r.max_dev = worst.max();
  r.tolerance = override_tol.value_or(tolerance);
  r.passed = r.max_dev <= r.tolerance;
  r.detail = worst.where().empty() ? "" : "worst at " + worst.where();
  return r;
}

std::vector<ClonerSpec> all_machines() {
  std::vector<ClonerSpec> specs;
  for (double g : gamma_grid()) {
    specs.push_back(ClonerSpec::asymmetric(g, false));
    specs.push_back(ClonerSpec::asymmetric(g, true));
  }
  for (auto [n, m] : symmetric_cases()) {
    specs.push_back(ClonerSpec::symmetric(n, m));
  }
  return specs;
}

std::string gamma_tag(double g) {
  std::ostringstream os;
  os << "gamma=" << g;
  return os.str();
}

}  // namespace

std::vector<double> gamma_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) {
    grid.push_back(-1.0 + 0.05 * i);
  }
  return grid;
}

std::vector<std::pair<std::size_t, std::size_t>> symmetric_cases() {
  return {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 5}, {2, 5}, {4, 4}};
}

std::vector<Complex> invariance_amplitudes() {
  return {{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {-1.5, 0.5}, {3.0, -2.0}};
}

double OracleComparison::max_dev() const {
  return std::max(std::abs(fidelity_fock_a - fidelity_gauss_a), std::abs(fidelity_fock_c - fidelity_gauss_c));
}

std::vector<OracleComparison> oracle_compare(double gamma, std::span<const Complex> xis, std::size_t cutoff) {
  const fock::FockSpace space(3, cutoff);
  const fock::SparseOperator unitary = fock::cloning_unitary_fock(gamma, space);
  std::vector<OracleComparison> out;
  for (const Complex& xi : xis) {
    const std::array<Complex, 3> inputs{Complex(0.0), Complex(0.0), xi};
    const fock::FockState evolved = fock::evolve(unitary, fock::product_coherent_state(space, inputs));
    const auto reports = clone_report(ClonerSpec::asymmetric(gamma), xi);
    OracleComparison c;
    c.gamma = gamma;
    c.xi = xi;
    c.cutoff = cutoff;
    c.fidelity_fock_a = fock::fidelity_fock(evolved, 0, xi);
    c.fidelity_fock_c = fock::fidelity_fock(evolved, 2, xi);
    c.fidelity_gauss_a = reports[0].fidelity;
    c.fidelity_gauss_c = reports[1].fidelity;
    out.push_back(c);
  }
  return out;
}

std::vector<SuiteResult> run_gaussian_suites(const std::optional<double>& tol) {
  std::vector<SuiteResult> results;

  {
    Worst w;
    for (const auto& spec : all_machines()) {
      w.update(check_symplectic(build_machine(spec).transform).max_dev(), describe(spec));
    }
    for (std::size_t k = 1; k <= 6; ++k) {
      w.update(check_symplectic(collect_chain(k)).max_dev(), "collect_chain(" + std::to_string(k) + ")");
      w.update(check_symplectic(distribute_chain(k)).max_dev(), "distribute_chain(" + std::to_string(k) + ")");
    }
    results.push_back(finish("symplectic", w, 1e-10, tol));
  }

  {
    Worst w;
    for (double g : gamma_grid()) {
      w.update(max_abs_difference(asym_factorized(g), asym_direct(g)), gamma_tag(g));
    }
    w.update(std::abs(asym_params(0.0).u), "u(gamma=0)");
    results.push_back(finish("factorization", w, 1e-9, tol));
  }

  {
    Worst fid;
    Worst photons;
    Worst product;
    for (double g : gamma_grid()) {
      const auto r = clone_report(ClonerSpec::asymmetric(g), Complex(1.0, 0.0));
      fid.update(std::abs(r[0].fidelity - 2.0 / (std::exp(2.0 * g) + 2.0)), gamma_tag(g) + " clone a");
      fid.update(std::abs(r[1].fidelity - 2.0 / (std::exp(-2.0 * g) + 2.0)), gamma_tag(g) + " clone c");
      photons.update(std::abs(r[0].n_chaotic - 0.5 * std::exp(2.0 * g)), gamma_tag(g) + " clone a");
      photons.update(std::abs(r[1].n_chaotic - 0.5 * std::exp(-2.0 * g)), gamma_tag(g) + " clone c");
      product.update(std::abs(noise_product(asym_direct(g), 0, 2) - 0.25), gamma_tag(g));
      product.update(std::abs(r[0].n_chaotic * r[1].n_chaotic - 0.25), gamma_tag(g) + " (covariance)");
    }
    results.push_back(finish("asymmetric_fidelity", fid, 1e-10, tol));
    results.push_back(finish("chaotic_photons", photons, 1e-10, tol));
    results.push_back(finish("noise_product", product, 1e-12, tol));
  }

  {
    Worst w;
    for (auto [n, m] : symmetric_cases()) {
      const double nd = static_cast<double>(n);
      const double md = static_cast<double>(m);
      const auto r = clone_report(ClonerSpec::symmetric(n, m), Complex(0.7, -0.2));
      const std::string tag = std::to_string(n) + "->" + std::to_string(m);
      for (const auto& c : r) {
        w.update(std::abs(c.fidelity - nd * md / (nd * md + md - nd)), tag + " fidelity");
        w.update(std::abs(c.n_chaotic - (md - nd) / (md * nd)), tag + " photons");
      }
    }
    results.push_back(finish("symmetric_bounds", w, 1e-10, tol));
  }

  {
    Worst identities;
    Worst invariance;
    Worst defect;
    Worst gain;
    Worst uncertainty;
    for (const auto& spec : all_machines()) {
      const Machine machine = build_machine(spec);
      const std::string tag = describe(spec);
      std::vector<double> first;
      for (const Complex& xi : invariance_amplitudes()) {
        const MachineReport rep = analyze_machine(spec, xi);
        uncertainty.update(std::max(0.0, -rep.diagnostics.uncertainty_min_eig), tag);
        for (std::size_t i = 0; i < rep.clones.size(); ++i) {
          const auto& c = rep.clones[i];
          const auto res = residuals(c);
          identities.update(std::max(res.fidelity_photon_identity, res.q_identity), tag);
          if (first.size() < rep.clones.size()) {
            first.push_back(c.fidelity);
          } else {
            invariance.update(std::abs(c.fidelity - first[i]), tag);
          }
        }
      }
      for (const auto& clone : machine.layout.clones) {
        defect.update(std::abs(phase_covariance_defect(machine.transform, clone, machine.layout.signals)), tag);
        gain.update(std::abs(signal_gain(machine.transform, clone, machine.layout.signals) - 1.0), tag);
      }
    }
    results.push_back(finish("fidelity_identities", identities, 1e-10, tol));
    results.push_back(finish("fidelity_invariance", invariance, 1e-10, tol));
    results.push_back(finish("phase_covariance", defect, 1e-10, tol));
    results.push_back(finish("unit_signal_gain", gain, 1e-10, tol));
    results.push_back(finish("uncertainty", uncertainty, 1e-10, tol));
  }

  {
    Worst w;
    const Complex xi(0.4, -0.3);
    for (std::size_t n = 2; n <= 4; ++n) {
      const std::vector<Complex> inputs(n, xi);
      const GaussianState out = apply_to_gaussian(collect_chain(n), coherent_vacuum_input(inputs));
      const std::string tag = "N=" + std::to_string(n);
      w.update(std::abs(out.amplitude(0) - std::sqrt(static_cast<double>(n)) * xi), tag + " collected");
      for (std::size_t k = 1; k < n; ++k) {
        const GaussianState port = reduce(out, k);
        w.update(port.mean().cwiseAbs().maxCoeff(), tag + " port mean");
        w.update((port.cov() - 0.5 * RMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), tag + " port cov");
      }
    }
    results.push_back(finish("signal_collection", w, 1e-12, tol));
  }

  return results;
}

std::vector<SuiteResult> run_oracle_suites(std::size_t cutoff, const std::optional<double>& tol) {
  const std::array<double, 3> gammas{-0.5, 0.0, 0.5};
  const std::array<Complex, 2> xis{Complex(0.0), Complex(0.3, 0.0)};

  Worst agreement;
  Worst convergence;
  for (double g : gammas) {
    const auto at_cutoff = oracle_compare(g, xis, cutoff);
    for (const auto& c : at_cutoff) {
      std::ostringstream tag;
      tag << gamma_tag(g) << " xi=" << c.xi.real() << " cutoff=" << cutoff;
      agreement.update(c.max_dev(), tag.str());
    }
    if (cutoff > kOracleBaseCutoff) {
      const auto base = oracle_compare(g, xis, kOracleBaseCutoff);
      for (std::size_t i = 0; i < base.size(); ++i) {
        std::ostringstream tag;
        tag << gamma_tag(g) << " xi=" << base[i].xi.real();
        // Positive when refining the cutoff made agreement worse.
        convergence.update(std::max(0.0, at_cutoff[i].max_dev() - base[i].max_dev()), tag.str());
      }
    }
  }
  std::vector<SuiteResult> results;
  results.push_back(finish("oracle_agreement", agreement, kOracleTol, tol));
  if (cutoff > kOracleBaseCutoff) {
    results.push_back(finish("oracle_convergence", convergence, 1e-9, tol));
  }
  return results;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  auto results = run_gaussian_suites(options.tolerance);
  if (options.oracle) {
    auto oracle = run_oracle_suites(options.cutoff, options.tolerance);
    results.insert(results.end(), oracle.begin(), oracle.end());
  }
  return results;
}

}  // namespace cvclone
