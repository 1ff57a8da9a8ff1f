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
 * @file symmetric.hpp
 * Exchange-symmetric four-qubit states and the search for the one that
 * maximizes the global measure R.
 *
 * The family is
 *
 *     l0 e^{i phi0} |0000> + 2 l1 |Wbar4> + sqrt(6) l2 e^{i phi1} |V4> + l3 |1111>
 *
 * with |Wbar4> the uniform superposition of weight-3 kets and |V4> that of
 * weight-2 kets. Weight-1 kets carry no amplitude.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "globent/qstate.hpp"
#include "globent/simplex.hpp"

namespace globent {

struct SymmetricForm {
  double l0 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;

  std::array<double, 6> to_array() const { return {l0, l1, l2, l3, phi0, phi1}; }
  static SymmetricForm from_array(const std::array<double, 6>& a) { return {a[0], a[1], a[2], a[3], a[4], a[5]}; }
};

/// Canonical representative: l1, l3 >= 0, l0^2 + 4 l1^2 + 6 l2^2 + l3^2 = 1,
/// phases wrapped into [0, 2 pi). Throws NormalizationFailure if every
/// magnitude vanishes.
SymmetricForm project(const SymmetricForm& p);

PureState build_symmetric_state(const SymmetricForm& p);

/// Canonical states by name: "ghz", "w", "wbar" (any n), "v4", "psi_m",
/// "bell_pair_product" (four qubits). Throws UnknownFixture.
PureState fixture(const std::string& name, int n = 4);
std::vector<std::string> fixture_names();

enum class SearchSlice {
  /// All six parameters free.
  Full,
  /// l1 = l2 = phi1 = 0: states a|0000> + b|1111>.
  GhzSlice,
};

struct SearchConfig {
  int starts = 64;
  int max_iters = 4000;
  double tol = 1e-12;
  std::uint64_t seed = 20060322;
  SearchSlice slice = SearchSlice::Full;
  /// Seed the first starts near GHZ4, Wbar4 and psi_m before random ones.
  bool anchor_starts = true;
  /// If set, the first start is exactly this point (no perturbation).
  std::optional<SymmetricForm> initial;
  int threads = 1;

  /// Throws ConfigError.
  void validate() const;
};

struct StartRecord {
  SymmetricForm initial;
  SymmetricForm final_params;
  double r;
  int iterations;
  bool converged;
};

struct SearchResult {
  SymmetricForm best_params;
  PureState best_state;
  double best_r;
  int starts;
  std::vector<StartRecord> trace;
};

/// R(build_symmetric_state(p)); zero when p cannot be normalized.
double symmetric_objective(const SymmetricForm& p);

/// Multi-start Nelder-Mead maximization of R over the symmetric family.
/// Deterministic for a fixed seed regardless of `threads`.
SearchResult maximize_r(const SearchConfig& config);

}  // namespace globent
