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
 * @file convex_roof.hpp
 * Mixed-state extension of eta_S and R by convex-roof minimization.
 *
 * The roof of a pure-state quantity Q at rho is the minimum of sum_i p_i Q(psi_i)
 * over all ensembles {p_i, psi_i} with sum_i p_i |psi_i><psi_i| = rho. Every
 * such ensemble of k members is obtained from the spectral ensemble through a
 * k x rank isometry V: |psi~_i> = sum_j V_ij sqrt(lambda_j) |v_j>. This module
 * minimizes over V numerically, so every reported value is an upper bound on
 * the roof, achieved by the returned witness ensemble. A small bound is
 * evidence of separability, not a proof.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "globent/qstate.hpp"

namespace globent {

struct EnsembleMember {
  double p;
  PureState state;
};

struct Ensemble {
  std::vector<EnsembleMember> members;

  std::size_t size() const noexcept { return members.size(); }
  DensityMatrix density() const;
};

struct RoofResult {
  double value;
  Ensemble witness;
  int iterations;
};

struct RoofConfig {
  /// Minimizations per ensemble size; the first starts at the spectral ensemble.
  int starts = 4;
  int max_iters = 20000;
  double tol = 1e-15;
  std::uint64_t seed = 20060322;
  /// Largest ensemble size tried is min(rank^2, rank + extra_members).
  int extra_members = 2;
  /// Bounds at or below this make tilde_r exactly zero; sizes stop growing
  /// once the bound drops below a hundredth of it.
  double zero_threshold = kTolerances.separability;

  void validate() const;
};

struct RoofEntry {
  QubitSubset representative;
  QubitSubset block;
  RoofResult bound;
};

/// Spectral decomposition with eigenvalues below 1e-12 dropped.
Ensemble eigen_ensemble(const DensityMatrix& rho);

/// Largest entrywise deviation of the ensemble's density from rho.
double reconstruction_residual(const Ensemble& ensemble, const DensityMatrix& rho);

/// Upper bound on the roof of eta_S. For rank-1 input this is exactly eta.
RoofResult tilde_eta(const DensityMatrix& rho, const QubitSubset& s, const RoofConfig& config = {});

/// Roof bounds for every bipartition, in enumerate_bipartitions order, each
/// evaluated on the same block as eta_profile.
std::vector<RoofEntry> tilde_profile(const DensityMatrix& rho, const RoofConfig& config = {});

/// Geometric mean of the tilde_profile bounds; zero if any bound is at most
/// config.zero_threshold. Rank-1 input returns global_r of the pure state.
double tilde_r(const DensityMatrix& rho, const RoofConfig& config = {});
double tilde_r(const std::vector<RoofEntry>& profile, const RoofConfig& config = {});

}  // namespace globent
