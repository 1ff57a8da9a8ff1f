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

#include "globent/symmetric.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "globent/errors.hpp"
#include "globent/measures.hpp"

namespace globent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

PureState weight_superposition(int n, int weight) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    if (std::popcount(static_cast<unsigned>(b)) == weight) v(b) = 1.0;
  }
  return normalize(PureState(n, std::move(v)));
}

void require_four(const std::string& name, int n) {
  if (n != 4) throw DimensionError("fixture '" + name + "' is defined for four qubits only");
}

}  // namespace

// ---------------------------------------------------------------------------
// Normal form

SymmetricForm project(const SymmetricForm& p) {
  const double norm2 = p.l0 * p.l0 + 4.0 * p.l1 * p.l1 + 6.0 * p.l2 * p.l2 + p.l3 * p.l3;
  if (!(norm2 > kTolerances.zero_norm)) {
    throw NormalizationFailure("symmetric form has vanishing magnitudes");
  }
  const double s = 1.0 / std::sqrt(norm2);
  // A negative magnitude is the same amplitude with its phase shifted by pi.
  const double phi0 = p.l0 < 0.0 ? p.phi0 + std::numbers::pi : p.phi0;
  const double phi1 = p.l2 < 0.0 ? p.phi1 + std::numbers::pi : p.phi1;
  return {std::abs(p.l0) * s, std::abs(p.l1) * s, std::abs(p.l2) * s, std::abs(p.l3) * s, wrap_phase(phi0),
          wrap_phase(phi1)};
}

PureState build_symmetric_state(const SymmetricForm& params) {
  const SymmetricForm p = project(params);
  const Complex top = std::polar(1.0, p.phi0) * p.l0;
  const Complex mid = std::polar(1.0, p.phi1) * p.l2;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  for (Eigen::Index b = 0; b < 16; ++b) {
    switch (std::popcount(static_cast<unsigned>(b))) {
      case 0: v(b) = top; break;
      case 2: v(b) = mid; break;
      case 3: v(b) = p.l1; break;
      case 4: v(b) = p.l3; break;
      default: break;
    }
  }
  return PureState(4, std::move(v));
}

// ---------------------------------------------------------------------------
// Fixtures

std::vector<std::string> fixture_names() {
  return {"ghz", "w", "wbar", "v4", "psi_m", "bell_pair_product"};
}

PureState fixture(const std::string& name, int n) {
  if (name == "ghz") {
    detail::require_qubit_count(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    v(0) = v(v.size() - 1) = std::numbers::sqrt2 / 2.0;
    return PureState(n, std::move(v));
  }
  if (name == "w") {
    detail::require_qubit_count(n);
    return weight_superposition(n, 1);
  }
  if (name == "wbar") {
    detail::require_qubit_count(n);
    return weight_superposition(n, n - 1);
  }
  if (name == "v4") {
    require_four(name, n);
    return weight_superposition(4, 2);
  }
  if (name == "psi_m") {
    require_four(name, n);
    return build_symmetric_state({1.0 / std::sqrt(3.0), 1.0 / std::sqrt(6.0), 0.0, 0.0, 0.0, 0.0});
  }
  if (name == "bell_pair_product") {
    require_four(name, n);
    const PureState bell = fixture("ghz", 2);
    return tensor(bell, bell);
  }
  throw UnknownFixture("unknown fixture '" + name + "'");
}

// ---------------------------------------------------------------------------
// Search

void SearchConfig::validate() const {
  if (starts < 1) throw ConfigError("starts must be at least 1");
  if (max_iters < 1) throw ConfigError("max_iters must be at least 1");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (threads < 1) throw ConfigError("threads must be at least 1");
}

double symmetric_objective(const SymmetricForm& p) {
  try {
    return global_r(build_symmetric_state(p));
  } catch (const NormalizationFailure&) {
    return 0.0;
  }
}

namespace {

// Maps between the full parameter record and the optimizer's free coordinates.
struct Slice {
  SearchSlice kind;

  std::vector<double> to_free(const SymmetricForm& p) const {
    if (kind == SearchSlice::GhzSlice) return {p.l0, p.l3, p.phi0};
    const auto a = p.to_array();
    return {a.begin(), a.end()};
  }

  SymmetricForm from_free(std::span<const double> x) const {
    if (kind == SearchSlice::GhzSlice) return {x[0], 0.0, 0.0, x[1], x[2], 0.0};
    return {x[0], x[1], x[2], x[3], x[4], x[5]};
  }

  std::vector<SymmetricForm> anchors() const {
    const double h = std::numbers::sqrt2 / 2.0;
    if (kind == SearchSlice::GhzSlice) return {{h, 0, 0, h, 0, 0}};
    return {{h, 0, 0, h, 0, 0}, {0, 0.5, 0, 0, 0, 0}, {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(6.0), 0, 0, 0, 0}};
  }
};

SymmetricForm random_form(std::mt19937_64& rng, const Slice& slice) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  // Uniform on the unit sphere of (l0, 2 l1, sqrt6 l2, l3).
  double a[4];
  for (double& v : a) v = gauss(rng);
  SymmetricForm p{a[0], a[1] / 2.0, a[2] / std::sqrt(6.0), a[3], phase(rng), phase(rng)};
  if (slice.kind == SearchSlice::GhzSlice) p.l1 = p.l2 = p.phi1 = 0.0;
  return p;
}

SymmetricForm start_point(const SearchConfig& cfg, const Slice& slice, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  if (cfg.initial) {
    if (index == 0) return *cfg.initial;
    --index;
  }
  const auto anchors = slice.anchors();
  if (cfg.anchor_starts && index < static_cast<int>(anchors.size())) {
    std::normal_distribution<double> noise(0.0, 0.05);
    auto v = slice.to_free(anchors[static_cast<std::size_t>(index)]);
    for (double& x : v) x += noise(rng);
    return slice.from_free(v);
  }
  for (;;) {
    SymmetricForm p = random_form(rng, slice);
    const double norm2 = p.l0 * p.l0 + 4 * p.l1 * p.l1 + 6 * p.l2 * p.l2 + p.l3 * p.l3;
    if (norm2 > 1e-6) return p;
  }
}

StartRecord run_start(const SearchConfig& cfg, const Slice& slice, int index) {
  const SymmetricForm init = start_point(cfg, slice, index);
  const Objective objective = [&slice](std::span<const double> x) {
    return -symmetric_objective(slice.from_free(x));
  };
  SimplexOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.f_tol = cfg.tol;
  opts.x_tol = 1e-9;
  opts.initial_step = 0.2;
  const SimplexResult res = minimize_simplex(objective, slice.to_free(init), opts);

  SymmetricForm fin = slice.from_free(res.x);
  try {
    fin = project(fin);
  } catch (const NormalizationFailure&) {
    // Degenerate endpoint; the record keeps the raw parameters with r = 0.
  }
  return {init, fin, symmetric_objective(fin), res.iterations, res.converged};
}

// True if a should win over b: larger r, ties broken by the smaller parameter vector.
bool better(const StartRecord& a, const StartRecord& b) {
  if (std::abs(a.r - b.r) > 1e-14) return a.r > b.r;
  return a.final_params.to_array() < b.final_params.to_array();
}

}  // namespace

SearchResult maximize_r(const SearchConfig& config) {
  config.validate();
  const Slice slice{config.slice};

  std::vector<StartRecord> trace(static_cast<std::size_t>(config.starts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.starts; i = next++) {
      trace[static_cast<std::size_t>(i)] = run_start(config, slice, i);
    }
  };
  const int nthreads = std::min(config.threads, config.starts);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (better(trace[i], trace[best])) best = i;
  }
  const SymmetricForm params = trace[best].final_params;
  PureState state = build_symmetric_state(params);
  const double r = global_r(state);
  return {params, std::move(state), r, config.starts, std::move(trace)};
}

}  // namespace globent
