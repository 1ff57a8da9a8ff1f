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
 * @file measures.hpp
 * Bipartition entanglement monotones of pure states and the scalar measures
 * built from them.
 *
 * For a block S of m qubits,
 *
 *     eta_S = 2^m / (2^m - 1) * (1 - Tr[rho_S^2]),
 *
 * which lies in [0, 1] and vanishes iff the state factorizes across (S, S^c).
 * The Meyer-Wallach measure and Scott's Q_m are arithmetic means of eta_S
 * over blocks of fixed size; the global measure R is the geometric mean over
 * every unordered bipartition and is zero unless the state is fully
 * inseparable.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "globent/pauli.hpp"
#include "globent/qstate.hpp"

namespace globent {

/// One unordered bipartition. `representative` is the side containing qubit 1;
/// `block` is the side whose eta is reported: the smaller side, or the
/// representative when both halves have n/2 qubits.
struct ProfileEntry {
  QubitSubset representative;
  QubitSubset block;
  double eta;
};

struct EtaProfile {
  int num_qubits;
  std::vector<ProfileEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::vector<double> values() const;
};

struct MeasureReport {
  double mw;
  /// scott[m-1] = Q_m for m = 1 .. floor(n/2).
  std::vector<double> scott;
  double r;
  EtaProfile profile;
};

/// Unclamped 2^m/(2^m-1) (1 - Tr[rho_S^2]); may be a few ulps outside [0,1].
double eta_raw(const PureState& state, const QubitSubset& s);

/// eta_S clamped to [0, 1]. Throws EmptySubset / FullSubset.
double eta(const PureState& state, const QubitSubset& s);

/// The same formula evaluated on an arbitrary density matrix's reduced state.
/// For mixed input this is not a monotone: classical mixing also lowers purity.
double eta_of_density(const DensityMatrix& rho, const QubitSubset& s);

/// eta_S = 1 - (sum_{L in B_S} alpha_L^2) / (2^|S| - 1), clamped to [0, 1].
/// The value agrees with `eta` on pure-state expansions; on mixed input it
/// equals eta_of_density.
double eta_from_pauli(const PauliExpansion& expansion, const QubitSubset& s);

/// The 2^(n-1) - 1 subsets that contain qubit 1, full set excluded, ascending.
std::vector<QubitSubset> enumerate_bipartitions(int n);

/// Side of the bipartition whose eta enters the profile (see ProfileEntry).
QubitSubset canonical_block(const QubitSubset& representative);

EtaProfile eta_profile(const PureState& state);

double mw_measure(const PureState& state);

/// Mean of eta_S over all C(n, m) subsets of size m, for any 1 <= m <= n-1.
double mean_eta_of_size(const PureState& state, int m);

/// Scott's Q_m; m must lie in [1, floor(n/2)].
double scott_measure(const PureState& state, int m);

/// Geometric mean of a profile, exactly zero if any value is below `zero_threshold`.
double geometric_mean_or_zero(const std::vector<double>& values, double zero_threshold);

double global_r(const PureState& state);
double global_r(const EtaProfile& profile);

MeasureReport measure_report(const PureState& state);

}  // namespace globent
