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

#include <functional>
#include <span>
#include <vector>

namespace globent {

struct SimplexOptions {
  int max_iters = 5000;
  /// Converged once the spread of vertex values is at most f_tol and the
  /// largest vertex distance from the best vertex is at most x_tol.
  double f_tol = 1e-12;
  double x_tol = 1e-9;
  double initial_step = 0.25;
  /// Fresh simplices built around the incumbent after convergence; a restart
  /// that does not improve the value by more than f_tol ends the run.
  int restarts = 3;
};

struct SimplexResult {
  std::vector<double> x;
  double value;
  int iterations;
  int evaluations;
  bool converged;
};

using Objective = std::function<double(std::span<const double>)>;

/// Nelder-Mead minimization. The returned value is never worse than f(x0).
SimplexResult minimize_simplex(const Objective& f, std::vector<double> x0, const SimplexOptions& opts = {});

}  // namespace globent
