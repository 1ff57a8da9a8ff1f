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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace globent {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

class Run {
 public:
  Run(const Objective& f, const SimplexOptions& opts) : f_(f), opts_(opts) {}

  double eval(const std::vector<double>& x) {
    ++evaluations;
    const double v = f_(std::span<const double>(x));
    return std::isnan(v) ? HUGE_VAL : v;
  }

  // One Nelder-Mead descent from a fresh simplex around `start`.
  Vertex descend(Vertex start, int budget, int& iterations, bool& converged) {
    const std::size_t dim = start.x.size();
    std::vector<Vertex> s;
    s.reserve(dim + 1);
    s.push_back(std::move(start));
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<double> x = s.front().x;
      x[i] += opts_.initial_step;
      const double fx = eval(x);
      s.push_back({std::move(x), fx});
    }

    std::vector<double> centroid(dim);
    std::vector<double> trial(dim);
    auto point = [&](double coef, const std::vector<double>& worst) {
      for (std::size_t i = 0; i < dim; ++i) trial[i] = centroid[i] + coef * (worst[i] - centroid[i]);
      return trial;
    };

    converged = false;
    while (iterations < budget) {
      std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      if (is_converged(s)) {
        converged = true;
        break;
      }
      ++iterations;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t v = 0; v < dim; ++v) {
        for (std::size_t i = 0; i < dim; ++i) centroid[i] += s[v].x[i];
      }
      for (double& c : centroid) c /= static_cast<double>(dim);

      Vertex& worst = s.back();
      std::vector<double> xr = point(-kReflect, worst.x);
      const double fr = eval(xr);
      if (fr < s.front().f) {
        std::vector<double> xe = point(-kExpand, worst.x);
        const double fe = eval(xe);
        if (fe < fr) {
          worst = {std::move(xe), fe};
        } else {
          worst = {std::move(xr), fr};
        }
        continue;
      }
      if (fr < s[dim - 1].f) {
        worst = {std::move(xr), fr};
        continue;
      }
      // Contraction: outside if the reflection beat the worst vertex, inside otherwise.
      const bool outside = fr < worst.f;
      std::vector<double> xc = point(outside ? -kContract : kContract, worst.x);
      const double fc = eval(xc);
      if (fc < (outside ? fr : worst.f)) {
        worst = {std::move(xc), fc};
        continue;
      }
      for (std::size_t v = 1; v <= dim; ++v) {
        for (std::size_t i = 0; i < dim; ++i) {
          s[v].x[i] = s[0].x[i] + kShrink * (s[v].x[i] - s[0].x[i]);
        }
        s[v].f = eval(s[v].x);
      }
    }
    std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    return std::move(s.front());
  }

  int evaluations = 0;

 private:
  bool is_converged(const std::vector<Vertex>& s) const {
    if (s.back().f - s.front().f > opts_.f_tol) return false;
    double spread = 0.0;
    for (std::size_t v = 1; v < s.size(); ++v) {
      for (std::size_t i = 0; i < s[v].x.size(); ++i) {
        spread = std::max(spread, std::abs(s[v].x[i] - s[0].x[i]));
      }
    }
    return spread <= opts_.x_tol;
  }

  const Objective& f_;
  const SimplexOptions& opts_;
};

}  // namespace

SimplexResult minimize_simplex(const Objective& f, std::vector<double> x0, const SimplexOptions& opts) {
  Run run(f, opts);
  Vertex best{x0, run.eval(x0)};
  if (x0.empty()) return {std::move(x0), best.f, 0, run.evaluations, true};

  int iterations = 0;
  bool converged = false;
  for (int attempt = 0; attempt <= opts.restarts && iterations < opts.max_iters; ++attempt) {
    const double before = best.f;
    Vertex next = run.descend(best, opts.max_iters, iterations, converged);
    if (next.f < best.f) best = std::move(next);
    if (attempt > 0 && before - best.f <= opts.f_tol) break;
  }
  return {std::move(best.x), best.f, iterations, run.evaluations, converged};
}

}  // namespace globent
