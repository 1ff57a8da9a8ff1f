// Copyright 2026 The globent Authors
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

#include "globent/ground_state.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "globent/errors.hpp"
#include "globent/measures.hpp"

namespace globent {

SpinHamiltonian SpinHamiltonian::zeros(int n) {
  detail::require_qubit_count(n);
  const auto un = static_cast<std::size_t>(n);
  return {n, std::vector<double>(un, 0.0), std::vector<double>(un, 0.0),
          std::vector<std::vector<double>>(un, std::vector<double>(un, 0.0))};
}

void SpinHamiltonian::set_coupling(int a, int b, double value) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw ConfigError("invalid coupling qubit pair");
  j[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = value;
  j[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = value;
}

void SpinHamiltonian::validate() const {
  detail::require_qubit_count(n);
  const auto un = static_cast<std::size_t>(n);
  if (delta.size() != un || eps.size() != un || j.size() != un) {
    throw ConfigError("Hamiltonian field arrays must have n entries");
  }
  for (std::size_t a = 0; a < un; ++a) {
    if (j[a].size() != un) throw ConfigError("coupling matrix must be n x n");
    if (j[a][a] != 0.0) throw ConfigError("coupling matrix must have zero diagonal");
    for (std::size_t b = 0; b < a; ++b) {
      if (j[a][b] != j[b][a]) throw ConfigError("coupling matrix must be symmetric");
    }
  }
}

Eigen::MatrixXcd build_hamiltonian(const SpinHamiltonian& h) {
  h.validate();
  const Eigen::Index d = Eigen::Index{1} << h.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  auto z = [](Eigen::Index b, int q) { return ((b >> q) & 1) ? -1.0 : 1.0; };
  for (Eigen::Index b = 0; b < d; ++b) {
    double diag = 0.0;
    for (int q = 0; q < h.n; ++q) {
      const auto uq = static_cast<std::size_t>(q);
      diag += h.eps[uq] * z(b, q);
      for (int r = q + 1; r < h.n; ++r) diag += h.j[uq][static_cast<std::size_t>(r)] * z(b, q) * z(b, r);
      m(b ^ (Eigen::Index{1} << q), b) += h.delta[uq];
    }
    m(b, b) += diag;
  }
  return m;
}

GroundState ground_state(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || h.rows() < 2 || (h.rows() & (h.rows() - 1)) != 0) {
    throw DimensionError("Hamiltonian must be a 2^n x 2^n matrix");
  }
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(h.rows()))));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const double e0 = es.eigenvalues()(0);
  const double gap = es.eigenvalues()(1) - e0;
  if (gap < kTolerances.degenerate_gap) {
    throw DegenerateGround("ground state is degenerate (gap " + std::to_string(gap) + ")", gap);
  }

  Eigen::VectorXcd v = es.eigenvectors().col(0);
  Eigen::Index pivot = 0;
  double largest = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Ties resolved toward the lowest index.
    if (std::abs(v(i)) > largest + 1e-12) {
      largest = std::abs(v(i));
      pivot = i;
    }
  }
  v *= std::conj(v(pivot)) / std::abs(v(pivot));
  v(pivot) = std::abs(v(pivot));
  v.normalize();
  return {e0, PureState(n, std::move(v)), gap};
}

double eigen_residual(const Eigen::MatrixXcd& h, const GroundState& gs) {
  const double r = (h * gs.state.amplitudes() - gs.energy * gs.state.amplitudes()).norm();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const double hn = es.eigenvalues().cwiseAbs().maxCoeff();
  return hn > 0.0 ? r / hn : r;
}

double SweepAxis::value(int i) const {
  if (steps == 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepSpec::validate(int n) const {
  for (const SweepAxis* a : {&global, &local}) {
    if (a->steps < 1) throw ConfigError("sweep axes need at least one step");
    if (!std::isfinite(a->min) || !std::isfinite(a->max)) throw ConfigError("sweep ranges must be finite");
  }
  if (qubit < 1 || qubit > n) throw ConfigError("swept qubit out of range");
  if (threads < 1) throw ConfigError("threads must be at least 1");
}

SpinHamiltonian biased(const SpinHamiltonian& h, double bias_global, int qubit, double bias_qubit) {
  SpinHamiltonian out = h;
  for (double& e : out.eps) e += bias_global;
  out.eps.at(static_cast<std::size_t>(qubit - 1)) += bias_qubit;
  return out;
}

SweepGrid sweep_r(const SpinHamiltonian& h, const SweepSpec& spec) {
  h.validate();
  spec.validate(h.n);
  SweepGrid grid{spec.global.steps, spec.local.steps, {}};
  grid.cells.resize(static_cast<std::size_t>(grid.rows) * static_cast<std::size_t>(grid.cols));

  auto evaluate = [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / grid.cols;
    const int k = static_cast<int>(idx) % grid.cols;
    SweepCell cell{spec.global.value(i), spec.local.value(k), 0.0, 0.0, false, 0.0};
    const Eigen::MatrixXcd m = build_hamiltonian(biased(h, cell.bias_global, spec.qubit, cell.bias_qubit));
    try {
      const GroundState gs = ground_state(m);
      cell.r = global_r(gs.state);
      cell.gap = gs.gap;
      cell.residual = eigen_residual(m, gs);
    } catch (const DegenerateGround& e) {
      cell.degenerate = true;
      cell.gap = e.gap();
    }
    grid.cells[idx] = cell;
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < grid.cells.size(); idx = next++) evaluate(idx);
  };
  const int nthreads = std::min<int>(spec.threads, static_cast<int>(grid.cells.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }
  return grid;
}

}  // namespace globent
