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

#include "globent/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "globent/errors.hpp"
#include "globent/measures.hpp"
#include "globent/simplex.hpp"

namespace globent {

namespace {

constexpr double kDropWeight = 1e-15;

// Isometries V (k x r) written as a product of plane rotations with phases
// acting on [I_r; 0], followed by phases on columns 1..r-1.
class IsometryFamily {
 public:
  IsometryFamily(int rank, int members) : r_(rank), k_(members) {
    for (int a = 0; a < r_; ++a) {
      for (int b = a + 1; b < k_; ++b) pairs_.emplace_back(a, b);
    }
  }

  std::size_t num_params() const { return 2 * pairs_.size() + static_cast<std::size_t>(r_ - 1); }

  Eigen::MatrixXcd build(std::span<const double> x) const {
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(k_, r_);
    std::size_t p = 0;
    for (const auto& [a, b] : pairs_) {
      const double c = std::cos(x[p]);
      const double s = std::sin(x[p]);
      const Complex e = std::polar(1.0, x[p + 1]);
      p += 2;
      const Eigen::RowVectorXcd ra = v.row(a);
      const Eigen::RowVectorXcd rb = v.row(b);
      v.row(a) = c * ra - std::conj(e) * s * rb;
      v.row(b) = e * s * ra + c * rb;
    }
    for (int j = 1; j < r_; ++j) v.col(j) *= std::polar(1.0, x[p++]);
    return v;
  }

 private:
  int r_;
  int k_;
  std::vector<std::pair<int, int>> pairs_;
};

struct SpectralData {
  int n;
  Eigen::MatrixXcd weighted;  // columns sqrt(lambda_j) |v_j>
};

SpectralData spectral(const Ensemble& ens, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXcd w(d, static_cast<Eigen::Index>(ens.size()));
  for (std::size_t j = 0; j < ens.size(); ++j) {
    w.col(static_cast<Eigen::Index>(j)) = std::sqrt(ens.members[j].p) * ens.members[j].state.amplitudes();
  }
  return {n, std::move(w)};
}

Ensemble ensemble_from(const SpectralData& sd, const Eigen::MatrixXcd& v) {
  const Eigen::MatrixXcd psi = sd.weighted * v.transpose();
  Ensemble out;
  for (Eigen::Index i = 0; i < psi.cols(); ++i) {
    const double p = psi.col(i).squaredNorm();
    if (p < kDropWeight) continue;
    out.members.push_back({p, PureState(sd.n, psi.col(i) / std::sqrt(p))});
  }
  return out;
}

double average_eta(const Ensemble& ens, const QubitSubset& s) {
  double acc = 0.0;
  for (const auto& m : ens.members) acc += m.p * eta(m.state, s);
  return acc;
}

}  // namespace

void RoofConfig::validate() const {
  if (starts < 1) throw ConfigError("roof starts must be at least 1");
  if (max_iters < 1) throw ConfigError("roof max_iters must be at least 1");
  if (!(tol > 0.0)) throw ConfigError("roof tol must be positive");
  if (extra_members < 0) throw ConfigError("extra_members must be non-negative");
  if (!(zero_threshold >= 0.0)) throw ConfigError("zero_threshold must be non-negative");
}

DensityMatrix Ensemble::density() const {
  if (members.empty()) throw NumericalError("empty ensemble");
  const int n = members.front().state.num_qubits();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& m : members) rho += m.p * m.state.amplitudes() * m.state.amplitudes().adjoint();
  return DensityMatrix(n, std::move(rho));
}

Ensemble eigen_ensemble(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  Ensemble out;
  // Descending eigenvalue order.
  for (Eigen::Index j = es.eigenvalues().size() - 1; j >= 0; --j) {
    const double lambda = es.eigenvalues()(j);
    if (lambda < kTolerances.eigen_cutoff) continue;
    out.members.push_back({lambda, PureState(rho.num_qubits(), es.eigenvectors().col(j))});
  }
  if (out.members.empty()) throw NumericalError("density matrix has no positive eigenvalue");
  return out;
}

double reconstruction_residual(const Ensemble& ensemble, const DensityMatrix& rho) {
  return (ensemble.density().entries() - rho.entries()).cwiseAbs().maxCoeff();
}

RoofResult tilde_eta(const DensityMatrix& rho, const QubitSubset& s, const RoofConfig& config) {
  config.validate();
  if (s.num_qubits() != rho.num_qubits()) throw DimensionError("subset and state sizes differ");
  s.require_block();

  Ensemble spectral_ens = eigen_ensemble(rho);
  const int rank = static_cast<int>(spectral_ens.size());
  RoofResult best{average_eta(spectral_ens, s), spectral_ens, 0};
  if (rank == 1) return best;

  const SpectralData sd = spectral(spectral_ens, rho.num_qubits());
  const int max_members = std::min(rank * rank, rank + config.extra_members);
  const double good_enough = config.zero_threshold * 1e-2;

  SimplexOptions opts;
  opts.max_iters = config.max_iters;
  opts.f_tol = config.tol;
  opts.x_tol = 1e-10;
  opts.initial_step = 0.5;

  for (int k = rank; k <= max_members && best.value > good_enough; ++k) {
    const IsometryFamily family(rank, k);
    const Objective objective = [&](std::span<const double> x) {
      return average_eta(ensemble_from(sd, family.build(x)), s);
    };
    for (int start = 0; start < config.starts && best.value > good_enough; ++start) {
      std::vector<double> x0(family.num_params(), 0.0);
      if (start > 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(start)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        for (double& v : x0) v = angle(rng);
      }
      const SimplexResult res = minimize_simplex(objective, std::move(x0), opts);
      best.iterations += res.iterations;
      if (res.value < best.value) {
        Ensemble witness = ensemble_from(sd, family.build(res.x));
        // Report the value the witness actually achieves.
        const double achieved = average_eta(witness, s);
        if (achieved < best.value) {
          best.value = achieved;
          best.witness = std::move(witness);
        }
      }
    }
  }
  return best;
}

std::vector<RoofEntry> tilde_profile(const DensityMatrix& rho, const RoofConfig& config) {
  std::vector<RoofEntry> out;
  for (const QubitSubset& rep : enumerate_bipartitions(rho.num_qubits())) {
    const QubitSubset block = canonical_block(rep);
    out.push_back({rep, block, tilde_eta(rho, block, config)});
  }
  return out;
}

double tilde_r(const std::vector<RoofEntry>& profile, const RoofConfig& config) {
  std::vector<double> values;
  bool pure = true;
  for (const auto& e : profile) {
    values.push_back(e.bound.value);
    pure = pure && e.bound.witness.size() == 1;
  }
  // Single-member witnesses mean rank-1 input, which keeps the pure-state threshold.
  if (!pure) {
    for (double v : values) {
      if (v <= config.zero_threshold) return 0.0;
    }
  }
  return geometric_mean_or_zero(values, kTolerances.r_zero);
}

double tilde_r(const DensityMatrix& rho, const RoofConfig& config) {
  return tilde_r(tilde_profile(rho, config), config);
}

}  // namespace globent
