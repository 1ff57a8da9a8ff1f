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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "globent/io.hpp"
#include "test_support.hpp"

namespace {

using namespace globent;
using namespace globent::testing;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

bool run(const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  out.check(secs < budget_s, "runtime over budget");
  std::printf("%s  %-28s %7.2fs / %.0fs  %s\n", out.ok ? "PASS" : "FAIL", name.c_str(), secs, budget_s,
              out.detail.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool profile_matches(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!near(got[i], want[i], tol)) return false;
  }
  return true;
}

// Profile values listed by block size, ascending representative mask within a size.
std::vector<double> by_block_size(const EtaProfile& profile) {
  std::vector<ProfileEntry> entries = profile.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ProfileEntry& a, const ProfileEntry& b) { return a.block.size() < b.block.size(); });
  std::vector<double> out;
  for (const auto& e : entries) out.push_back(e.eta);
  return out;
}

PureState bell_pair_alternating() { return superposition(4, {0b0101, 0b1010}); }

// 1. Fixture values.
void fixtures(Outcome& o) {
  o.check(near(global_r(fixture("ghz", 3)), 1.0, 1e-9), "R(GHZ3) = 1");
  o.check(near(global_r(fixture("w", 3)), 8.0 / 9.0, 1e-9), "R(W3) = 8/9");
  const double t = 2.0 / 3.0;
  o.check(profile_matches(by_block_size(eta_profile(fixture("ghz", 4))), {1, 1, 1, 1, t, t, t}, 1e-9), "GHZ4 profile");
  const double e = 8.0 / 9.0;
  const PureState psi = fixture("psi_m", 4);
  o.check(profile_matches(by_block_size(eta_profile(psi)), {1, 1, 1, 1, e, e, e}, 1e-9), "psi_m profile");
  o.check(near(global_r(psi), 0.95077, 1e-4), "R(psi_m)");
  o.check(near(global_r(bell_pair_alternating()), 0.8405, 1e-4), "R(|0101>+|1010>)");
  const PureState bb = fixture("bell_pair_product", 4);
  o.check(near(mw_measure(fixture("ghz", 4)), 1.0, 1e-9), "MW(GHZ4) = 1");
  o.check(near(mw_measure(bb), 1.0, 1e-9), "MW(Bell x Bell) = 1");
  o.check(global_r(bb) == 0.0, "R(Bell x Bell) == 0");
  o.detail << "R(psi_m)=" << global_r(psi) << " ";
}

// 2. Rediscovery of the symmetric maximizer from random starts only.
void search(Outcome& o) {
  SearchConfig cfg;
  cfg.starts = 64;
  cfg.seed = 20060322;
  cfg.anchor_starts = false;
  const SearchResult res = maximize_r(cfg);
  o.check(res.best_r >= 0.95077 - 1e-3, "best_r threshold");
  const auto got = by_block_size(eta_profile(res.best_state));
  const auto want = by_block_size(eta_profile(fixture("psi_m", 4)));
  o.check(profile_matches(got, want, 1e-3), "profile matches psi_m");
  o.detail << "starts=" << res.starts << " best_r=" << res.best_r << " ";
}

// 3. Identities on random pure states.
void identities(Outcome& o) {
  Rng rng(3);
  double worst_dual = 0, worst_scott = 0, worst_mw = 0, worst_pauli = 0, worst_lu = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto reps = enumerate_bipartitions(n);
    o.check(reps.size() == (std::size_t{1} << (n - 1)) - 1, "profile cardinality");
    for (int t = 0; t < 1000; ++t) {
      const PureState psi = random_state(n, rng);
      for (const QubitSubset& s : reps) {
        const QubitSubset c = s.complement();
        const double lhs = (1.0 - std::ldexp(1.0, -s.size())) * eta_raw(psi, s);
        const double rhs = (1.0 - std::ldexp(1.0, -c.size())) * eta_raw(psi, c);
        worst_dual = std::max(worst_dual, std::abs(lhs - rhs));
      }
      for (int m = 1; m < n; ++m) {
        const double lhs = (1.0 - std::ldexp(1.0, -m)) * mean_eta_of_size(psi, m);
        const double rhs = (1.0 - std::ldexp(1.0, -(n - m))) * mean_eta_of_size(psi, n - m);
        worst_scott = std::max(worst_scott, std::abs(lhs - rhs));
      }
      worst_mw = std::max(worst_mw, std::abs(scott_measure(psi, 1) - mw_measure(psi)));

      const PauliExpansion ex = pauli_expand(to_density(psi));
      const EtaProfile prof = eta_profile(psi);
      o.check(prof.size() == reps.size(), "profile cardinality");
      for (const auto& e : prof.entries) worst_pauli = std::max(worst_pauli, std::abs(eta_from_pauli(ex, e.block) - e.eta));

      PureState rotated = psi;
      for (int q = 1; q <= n; ++q) rotated = apply_single_qubit(rotated, q, random_unitary(rng));
      const auto a = prof.values();
      const auto b = eta_profile(rotated).values();
      for (std::size_t i = 0; i < a.size(); ++i) worst_lu = std::max(worst_lu, std::abs(a[i] - b[i]));
    }
  }
  o.check(worst_dual <= 1e-10, "duality");
  o.check(worst_scott <= 1e-10, "Scott duality");
  o.check(worst_mw <= 1e-10, "Q_1 = MW");
  o.check(worst_pauli <= 1e-9, "Pauli route");
  o.check(worst_lu <= 1e-9, "local-unitary invariance");
  o.detail << "max dev: dual=" << worst_dual << " scott=" << worst_scott << " mw=" << worst_mw
           << " pauli=" << worst_pauli << " lu=" << worst_lu << " ";
}

// 4. Product states vanish across their cut; GHZ_n has every entry above 1/2.
void separability(Outcome& o) {
  Rng rng(4);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    const QubitSubset s = random_block(n, rng);
    const PureState psi = random_product_across(s, rng);
    worst = std::max(worst, eta(psi, s));
    o.check(global_r(psi) == 0.0, "R == 0 on product state");
  }
  o.check(worst <= 1e-10, "eta across product cut");
  for (int n = 2; n <= 5; ++n) {
    for (double v : eta_profile(fixture("ghz", n)).values()) o.check(v > 0.5, "GHZ_n entry > 1/2");
  }
  o.detail << "max eta across cut=" << worst << " ";
}

// 5. Convex-roof bounds.
void convex_roof(Outcome& o, const std::string& data) {
  Rng rng(5);
  RoofConfig cfg;
  double worst_pure = 0.0, worst_residual = 0.0, worst_sep = 0.0;
  auto residual_of = [&](const std::vector<RoofEntry>& entries, const DensityMatrix& rho) {
    for (const auto& e : entries) worst_residual = std::max(worst_residual, reconstruction_residual(e.bound.witness, rho));
  };

  for (int t = 0; t < 50; ++t) {
    const PureState psi = random_state(2 + t % 3, rng);
    const DensityMatrix rho = to_density(psi);
    const auto entries = tilde_profile(rho, cfg);
    const auto pure = eta_profile(psi).values();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      worst_pure = std::max(worst_pure, std::abs(entries[i].bound.value - pure[i]));
    }
    residual_of(entries, rho);
  }

  std::vector<DensityMatrix> mixtures{io::density_from_text(io::read_file(data + "/separable_mixture.json"))};
  for (int t = 0; t < 20; ++t) mixtures.push_back(random_product_mixture(2 + t % 2, 2 + t % 3, rng));
  for (const DensityMatrix& rho : mixtures) {
    const auto entries = tilde_profile(rho, cfg);
    for (const auto& e : entries) worst_sep = std::max(worst_sep, e.bound.value);
    residual_of(entries, rho);
    o.check(tilde_r(entries, cfg) == 0.0, "tilde R == 0 on separable mixture");
  }
  o.check(worst_pure <= 1e-6, "pure-state degeneracy");
  o.check(worst_sep <= 1e-6, "separable bound");
  o.check(worst_residual <= 1e-8, "witness residual");
  o.detail << "pure dev=" << worst_pure << " sep bound=" << worst_sep << " residual=" << worst_residual << " ";
}

// 6. Ground-state sweep of a four-qubit antiferromagnetic chain.
void sweep(Outcome& o, const std::string& data) {
  const SpinHamiltonian h = io::hamiltonian_from_text(io::read_file(data + "/afm4_chain.json"));
  const SweepSpec spec{{-0.5, 0.5, 41}, {-0.5, 0.5, 41}, 2, 1};
  const SweepGrid grid = sweep_r(h, spec);

  double worst_residual = 0.0;
  const SweepCell* best = nullptr;
  for (const SweepCell& c : grid.cells) {
    o.check(!c.degenerate, "nondegenerate ground state");
    worst_residual = std::max(worst_residual, c.residual);
    if (best == nullptr || c.r > best->r) best = &c;
  }
  o.check(worst_residual <= 1e-8, "eigen residual");
  o.check(best->r >= 0.70 && best->r <= 0.85, "max R in [0.70, 0.85]");

  const GroundState gs =
      ground_state(build_hamiltonian(biased(h, best->bias_global, spec.qubit, best->bias_qubit)));
  const double overlap = std::abs(bell_pair_alternating().amplitudes().dot(gs.state.amplitudes()));
  o.check(overlap >= 0.9, "argmax overlap with |0101>+|1010>");

  const SpinHamiltonian free = io::hamiltonian_from_text(io::read_file(data + "/zero_coupling4.json"));
  const SweepGrid control = sweep_r(free, spec);
  for (const SweepCell& c : control.cells) o.check(c.r == 0.0, "zero-coupling control R == 0");

  o.detail << "max R=" << best->r << " at (" << best->bias_global << ", " << best->bias_qubit
           << ") overlap=" << overlap << " residual=" << worst_residual << " ";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globent acceptance checks"};
  std::string data = "data";
  app.add_option("--data", data, "Directory holding the shipped data files")->check(CLI::ExistingDirectory);
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  ok &= run("1 fixture values", 1, fixtures);
  ok &= run("2 search rediscovery", 60, search);
  ok &= run("3 identity suite", 600, identities);
  ok &= run("4 separability suite", 600, separability);
  ok &= run("5 convex roof", 120, [&](Outcome& o) { convex_roof(o, data); });
  ok &= run("6 ground-state sweep", 30, [&](Outcome& o) { sweep(o, data); });
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
