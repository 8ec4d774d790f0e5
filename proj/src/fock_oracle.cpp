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

#include "cvclone/fock_oracle.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace cvclone::fock {

namespace {

constexpr std::size_t kA = 0;
constexpr std::size_t kB = 1;
constexpr std::size_t kC = 2;

const Complex kI(0.0, 1.0);

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void check_mode(const FockSpace& space, const ModeLabel& m, const char* what) {
  if (m.index >= space.n_modes()) {
    throw std::out_of_range(std::string(what) + ": mode " + std::to_string(m.index) + " out of range");
  }
}

// Amplitudes reshaped to (levels of `mode`) x (all other modes).
CMatrix split_mode(const FockState& s, std::size_t mode) {
  const FockSpace& space = s.space();
  const std::size_t levels = space.levels();
  const std::size_t rest = space.dimension() / levels;
  CMatrix psi(static_cast<Eigen::Index>(levels), static_cast<Eigen::Index>(rest));
  std::size_t stride = 1;
  for (std::size_t k = mode + 1; k < space.n_modes(); ++k) {
    stride *= levels;
  }
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const std::size_t digit = (i / stride) % levels;
    const std::size_t high = i / (stride * levels);
    const std::size_t low = i % stride;
    psi(static_cast<Eigen::Index>(digit), static_cast<Eigen::Index>(high * stride + low)) =
        s.amplitudes()(static_cast<Eigen::Index>(i));
  }
  return psi;
}

}  // namespace

FockSpace::FockSpace(std::size_t n_modes, std::size_t cutoff, std::size_t budget)
    : n_modes_(n_modes), cutoff_(cutoff), dimension_(1) {
  if (n_modes == 0) {
    throw std::invalid_argument("FockSpace: n_modes must be >= 1");
  }
  if (cutoff == 0) {
    throw std::invalid_argument("FockSpace: cutoff must be >= 1");
  }
  for (std::size_t k = 0; k < n_modes; ++k) {
    dimension_ *= levels();
    if (dimension_ > budget) {
      throw std::length_error("FockSpace: dimension (cutoff+1)^" + std::to_string(n_modes) +
                              " exceeds budget " + std::to_string(budget));
    }
  }
}

std::size_t FockSpace::index(std::span<const std::size_t> occupations) const {
  if (occupations.size() != n_modes_) {
    throw std::invalid_argument("FockSpace::index: wrong number of occupations");
  }
  std::size_t idx = 0;
  for (std::size_t n : occupations) {
    if (n > cutoff_) {
      throw std::out_of_range("FockSpace::index: occupation above cutoff");
    }
    idx = idx * levels() + n;
  }
  return idx;
}

std::vector<std::size_t> FockSpace::occupations(std::size_t index) const {
  std::vector<std::size_t> occ(n_modes_);
  for (std::size_t k = n_modes_; k-- > 0;) {
    occ[k] = index % levels();
    index /= levels();
  }
  return occ;
}

FockState::FockState(FockSpace space, CVector amplitudes) : space_(space), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_.dimension()) {
    throw std::invalid_argument("FockState: amplitude vector does not match space dimension");
  }
}

SparseOperator generator_matrix(GeneratorKind kind, const FockSpace& space, const ModeLabel& first,
                                const ModeLabel& second) {
  check_mode(space, first, "generator_matrix");
  check_mode(space, second, "generator_matrix");
  if (first.index == second.index) {
    throw std::invalid_argument("generator_matrix: modes must be distinct");
  }
  const std::size_t f = first.index;
  const std::size_t s = second.index;
  const std::size_t cut = space.cutoff();

  std::vector<Eigen::Triplet<Complex>> entries;
  std::vector<std::size_t> occ;
  auto add = [&](std::size_t source, std::vector<std::size_t> target_occ, Complex value) {
    const auto row = static_cast<int>(space.index(target_occ));
    entries.emplace_back(row, static_cast<int>(source), value);
  };

  for (std::size_t i = 0; i < space.dimension(); ++i) {
    occ = space.occupations(i);
    const double nf = static_cast<double>(occ[f]);
    const double ns = static_cast<double>(occ[s]);
    if (kind == GeneratorKind::U) {
      // i second first^+
      if (occ[s] >= 1 && occ[f] < cut) {
        auto t = occ;
        --t[s];
        ++t[f];
        add(i, t, kI * std::sqrt(ns * (nf + 1.0)));
      }
      // -i second^+ first
      if (occ[f] >= 1 && occ[s] < cut) {
        auto t = occ;
        --t[f];
        ++t[s];
        add(i, t, -kI * std::sqrt(nf * (ns + 1.0)));
      }
    } else {
      // i first second
      if (occ[f] >= 1 && occ[s] >= 1) {
        auto t = occ;
        --t[f];
        --t[s];
        add(i, t, kI * std::sqrt(nf * ns));
      }
      // -i first^+ second^+
      if (occ[f] < cut && occ[s] < cut) {
        auto t = occ;
        ++t[f];
        ++t[s];
        add(i, t, -kI * std::sqrt((nf + 1.0) * (ns + 1.0)));
      }
    }
  }
  const auto dim = static_cast<Eigen::Index>(space.dimension());
  SparseOperator h(dim, dim);
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

SparseOperator exp_hermitian(const SparseOperator& h, double theta) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("exp_hermitian: matrix must be square");
  }
  const auto dim = static_cast<std::size_t>(h.rows());
  std::vector<std::size_t> parent(dim);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (Eigen::Index col = 0; col < h.outerSize(); ++col) {
    for (SparseOperator::InnerIterator it(h, col); it; ++it) {
      if (it.value() != Complex(0.0)) {
        const auto ra = find_root(parent, static_cast<std::size_t>(it.row()));
        const auto rb = find_root(parent, static_cast<std::size_t>(it.col()));
        if (ra != rb) {
          parent[ra] = rb;
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> blocks(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    blocks[find_root(parent, i)].push_back(i);
  }

  std::vector<Eigen::Triplet<Complex>> entries;
  for (const auto& block : blocks) {
    if (block.empty()) {
      continue;
    }
    const auto n = static_cast<Eigen::Index>(block.size());
    CMatrix dense(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        dense(r, c) = h.coeff(static_cast<Eigen::Index>(block[static_cast<std::size_t>(r)]),
                              static_cast<Eigen::Index>(block[static_cast<std::size_t>(c)]));
      }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(dense);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("exp_hermitian: eigendecomposition failed");
    }
    const Eigen::VectorXcd phases =
        (solver.eigenvalues().cast<Complex>() * Complex(0.0, -theta)).array().exp().matrix();
    const CMatrix block_exp = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        entries.emplace_back(static_cast<int>(block[static_cast<std::size_t>(r)]),
                             static_cast<int>(block[static_cast<std::size_t>(c)]), block_exp(r, c));
      }
    }
  }
  SparseOperator out(h.rows(), h.cols());
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

SparseOperator cloning_unitary_fock(double gamma, const FockSpace& space) {
  if (space.n_modes() != 3) {
    throw std::invalid_argument("cloning_unitary_fock: needs a three-mode (a, b, c) space");
  }
  if (!std::isfinite(gamma)) {
    throw std::invalid_argument("cloning_unitary_fock: gamma must be finite");
  }
  const double chi = gamma + std::log(2.0) / 2.0;
  const SparseOperator u = generator_matrix(GeneratorKind::U, space, kA, kC);
  const SparseOperator v = generator_matrix(GeneratorKind::V, space, kC, kB);
  const SparseOperator y = generator_matrix(GeneratorKind::Y, space, kA, kB);
  const SparseOperator mix = exp_hermitian(u + v, 1.0);
  const SparseOperator squeeze = exp_hermitian(y, chi);
  return mix * squeeze;
}

double unitarity_deviation(const SparseOperator& op, const FockSpace& space, std::size_t max_total_photons) {
  if (static_cast<std::size_t>(op.rows()) != space.dimension() || op.rows() != op.cols()) {
    throw std::invalid_argument("unitarity_deviation: operator does not match space");
  }
  std::vector<Eigen::Index> low;
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const auto occ = space.occupations(i);
    if (std::accumulate(occ.begin(), occ.end(), std::size_t{0}) <= max_total_photons) {
      low.push_back(static_cast<Eigen::Index>(i));
    }
  }
  CMatrix cols(op.rows(), static_cast<Eigen::Index>(low.size()));
  for (std::size_t j = 0; j < low.size(); ++j) {
    cols.col(static_cast<Eigen::Index>(j)) = CVector(op.col(low[j]));
  }
  const CMatrix gram = cols.adjoint() * cols;
  return (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

CVector coherent_vector(std::size_t cutoff, Complex xi) {
  CVector v(static_cast<Eigen::Index>(cutoff + 1));
  Complex term = std::exp(-0.5 * std::norm(xi));
  for (std::size_t n = 0; n <= cutoff; ++n) {
    if (n > 0) {
      term *= xi / std::sqrt(static_cast<double>(n));
    }
    v(static_cast<Eigen::Index>(n)) = term;
  }
  return v;
}

FockState product_coherent_state(const FockSpace& space, std::span<const Complex> amplitudes) {
  if (amplitudes.size() != space.n_modes()) {
    throw std::invalid_argument("product_coherent_state: one amplitude per mode required");
  }
  CVector psi = CVector::Ones(1);
  for (const Complex& xi : amplitudes) {
    CVector single = coherent_vector(space.cutoff(), xi);
    single.normalize();
    CVector next(psi.size() * single.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      next.segment(i * single.size(), single.size()) = psi(i) * single;
    }
    psi = std::move(next);
  }
  return {space, std::move(psi)};
}

FockState evolve(const SparseOperator& op, const FockState& s) {
  if (static_cast<std::size_t>(op.cols()) != s.space().dimension()) {
    throw std::invalid_argument("evolve: operator does not match state space");
  }
  return {s.space(), op * s.amplitudes()};
}

CMatrix reduced_density_matrix(const FockState& s, const ModeLabel& mode) {
  check_mode(s.space(), mode, "reduced_density_matrix");
  const CMatrix psi = split_mode(s, mode.index);
  return psi * psi.adjoint();
}

double top_level_population(const FockState& s, const ModeLabel& mode) {
  const CMatrix rho = reduced_density_matrix(s, mode);
  const auto top = rho.rows() - 1;
  return rho(top, top).real();
}

Complex mean_amplitude(const FockState& s, const ModeLabel& mode) {
  const CMatrix rho = reduced_density_matrix(s, mode);
  Complex sum = 0.0;
  for (Eigen::Index n = 1; n < rho.rows(); ++n) {
    sum += std::sqrt(static_cast<double>(n)) * rho(n, n - 1);
  }
  return sum;
}

double fidelity_fock(const FockState& s, const ModeLabel& clone, Complex xi, double leakage_threshold) {
  check_mode(s.space(), clone, "fidelity_fock");
  const CVector target = coherent_vector(s.space().cutoff(), xi);
  const double lost = 1.0 - target.squaredNorm();
  if (lost > 1e-6) {
    throw InvariantViolation("fidelity_fock: coherent amplitude too large for cutoff " +
                             std::to_string(s.space().cutoff()) + " (lost norm " + std::to_string(lost) + ")");
  }
  for (std::size_t k = 0; k < s.space().n_modes(); ++k) {
    const double leak = top_level_population(s, k);
    if (leak > leakage_threshold) {
      throw InvariantViolation("fidelity_fock: truncation leakage " + std::to_string(leak) + " in mode " +
                               std::to_string(k) + " exceeds " + std::to_string(leakage_threshold));
    }
  }
  const CMatrix rho = reduced_density_matrix(s, clone);
  return (target.adjoint() * rho * target).value().real();
}

}  // namespace cvclone::fock
