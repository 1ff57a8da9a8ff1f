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

/**
 * @file ground_state.hpp
 * Transverse-field spin Hamiltonians of the coupled flux-qubit form
 *
 *     H = sum_i (delta_i X_i + eps_i Z_i) + sum_{i<j} J_ij Z_i Z_j,
 *
 * their ground states, and sweeps of the global measure R over two bias axes.
 * Energies carry whatever unit the caller uses.
 */
#pragma once

#include <vector>

#include "globent/qstate.hpp"

namespace globent {

struct SpinHamiltonian {
  int n = 0;
  std::vector<double> delta;
  std::vector<double> eps;
  /// Symmetric n x n couplings, zero diagonal; j[i][k] couples qubits i+1, k+1.
  std::vector<std::vector<double>> j;

  /// Zero fields and couplings on n qubits.
  static SpinHamiltonian zeros(int n);
  /// Sets J between 1-based qubits a != b (both orderings).
  void set_coupling(int a, int b, double value);
  /// Throws ConfigError / DimensionError.
  void validate() const;
};

Eigen::MatrixXcd build_hamiltonian(const SpinHamiltonian& h);

struct GroundState {
  double energy;
  PureState state;
  double gap;
};

/// Lowest eigenpair by dense Hermitian eigendecomposition. The eigenvector's
/// largest-magnitude amplitude (lowest index on ties) is made real positive.
/// Throws DegenerateGround if E1 - E0 < 1e-10.
GroundState ground_state(const Eigen::MatrixXcd& h);

/// |H v - E v| / |H| in 2-norms, |H| being the spectral norm. Absolute when H = 0.
/// Computes the spectrum of `h` again; meant for validation.
double eigen_residual(const Eigen::MatrixXcd& h, const GroundState& gs);

struct SweepAxis {
  double min;
  double max;
  int steps;

  double value(int i) const;
};

struct SweepSpec {
  /// Offset added to every eps_i.
  SweepAxis global;
  /// Extra offset added to eps of `qubit` (1-based).
  SweepAxis local;
  int qubit = 2;
  int threads = 1;

  void validate(int n) const;
};

struct SweepCell {
  double bias_global;
  double bias_qubit;
  double r;
  double gap;
  bool degenerate;
  double residual;
};

struct SweepGrid {
  int rows;  // global steps
  int cols;  // local steps
  /// Row-major: global axis outer, local axis inner.
  std::vector<SweepCell> cells;

  const SweepCell& at(int i, int k) const { return cells.at(static_cast<std::size_t>(i * cols + k)); }
};

/// Hamiltonian with biases applied for one grid point.
SpinHamiltonian biased(const SpinHamiltonian& h, double bias_global, int qubit, double bias_qubit);

/// Ground-state R over the grid; degenerate cells report r = 0 with a flag.
/// Output is independent of `spec.threads`.
SweepGrid sweep_r(const SpinHamiltonian& h, const SweepSpec& spec);

}  // namespace globent
