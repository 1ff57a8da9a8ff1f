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

#pragma once

namespace globent {

/// Every numerical threshold used by the library lives here.
struct Tolerances {
  /// Entrywise equality for states, Hermiticity, trace.
  double equality = 1e-10;
  /// Slack allowed on negative eigenvalues and purity bounds.
  double psd = 1e-9;
  /// Squared norm at or below which a vector counts as zero.
  double zero_norm = 1e-14;
  /// Any clamped eta below this makes the global measure exactly zero.
  double r_zero = 1e-12;
  /// Convex-roof bounds at or below this count as separable evidence.
  double separability = 1e-6;
  /// Eigenvalues kept in a spectral ensemble.
  double eigen_cutoff = 1e-12;
  /// Ground states with a smaller gap are reported as degenerate.
  double degenerate_gap = 1e-10;
};

inline constexpr Tolerances kTolerances{};

/// Largest supported register.
inline constexpr int kMaxQubits = 12;

}  // namespace globent
