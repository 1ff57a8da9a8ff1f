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

#include "globent/simplex.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace globent;

TEST(Simplex, QuadraticBowl) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const SimplexResult r = minimize_simplex(f, {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], -2.0, 1e-5);
  EXPECT_LT(r.value, 1e-10);
}

TEST(Simplex, Rosenbrock) {
  const Objective f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  SimplexOptions opts;
  opts.max_iters = 20000;
  const SimplexResult r = minimize_simplex(f, {-1.2, 1.0}, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

TEST(Simplex, NeverWorseThanStart) {
  // Flat objective with NaN pockets; the starting value must survive.
  const Objective f = [](std::span<const double> x) { return x[0] > 0.1 ? std::nan("") : 3.0; };
  const SimplexResult r = minimize_simplex(f, {0.0, 0.0});
  EXPECT_EQ(r.value, 3.0);
}

TEST(Simplex, RespectsIterationCap) {
  const Objective f = [](std::span<const double> x) { return std::sin(x[0]) * std::cos(x[1]) + 0.01 * x[0] * x[0]; };
  SimplexOptions opts;
  opts.max_iters = 5;
  const SimplexResult r = minimize_simplex(f, {0.3, 0.2}, opts);
  EXPECT_LE(r.iterations, 5);
  EXPECT_FALSE(r.converged);
}
