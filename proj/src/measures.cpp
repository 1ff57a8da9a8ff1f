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

#include "globent/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "globent/errors.hpp"

namespace globent {

namespace {

double block_weight(int m) {
  const double d = std::ldexp(1.0, m);
  return d / (d - 1.0);
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_sizes(int state_qubits, const QubitSubset& s) {
  if (s.num_qubits() != state_qubits) throw DimensionError("subset and state sizes differ");
  s.require_block();
}

}  // namespace

std::vector<double> EtaProfile::values() const {
  std::vector<double> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.eta);
  return v;
}

double eta_raw(const PureState& state, const QubitSubset& s) {
  check_sizes(state.num_qubits(), s);
  return block_weight(s.size()) * (1.0 - reduced_purity(state, s));
}

double eta(const PureState& state, const QubitSubset& s) { return clamp01(eta_raw(state, s)); }

double eta_of_density(const DensityMatrix& rho, const QubitSubset& s) {
  check_sizes(rho.num_qubits(), s);
  return clamp01(block_weight(s.size()) * (1.0 - purity(partial_trace(rho, s))));
}

double eta_from_pauli(const PauliExpansion& expansion, const QubitSubset& s) {
  check_sizes(expansion.num_qubits(), s);
  double sum = 0.0;
  for (std::size_t w : support_words(s)) sum += expansion[w] * expansion[w];
  return clamp01(1.0 - sum / (std::ldexp(1.0, s.size()) - 1.0));
}

std::vector<QubitSubset> enumerate_bipartitions(int n) {
  if (n < 2) throw DimensionError("bipartitions need at least two qubits");
  detail::require_qubit_count(n);
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<QubitSubset> out;
  out.reserve((std::size_t{1} << (n - 1)) - 1);
  for (std::uint32_t mask = 1; mask < full; mask += 2) out.emplace_back(n, mask);
  return out;
}

QubitSubset canonical_block(const QubitSubset& representative) {
  const int n = representative.num_qubits();
  if (2 * representative.size() <= n) return representative;
  return representative.complement();
}

EtaProfile eta_profile(const PureState& state) {
  EtaProfile p{state.num_qubits(), {}};
  for (const QubitSubset& rep : enumerate_bipartitions(state.num_qubits())) {
    const QubitSubset block = canonical_block(rep);
    p.entries.push_back({rep, block, eta(state, block)});
  }
  return p;
}

double mean_eta_of_size(const PureState& state, int m) {
  const int n = state.num_qubits();
  if (m < 1 || m > n - 1) throw ConfigError("block size must lie in [1, n-1]");
  const std::uint32_t full = (1u << n) - 1u;
  double sum = 0.0;
  long count = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) != m) continue;
    sum += eta_raw(state, QubitSubset(n, mask));
    ++count;
  }
  return sum / static_cast<double>(count);
}

double mw_measure(const PureState& state) {
  if (state.num_qubits() < 2) throw DimensionError("the Meyer-Wallach measure needs n >= 2");
  const int n = state.num_qubits();
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += 2.0 * (1.0 - reduced_purity(state, QubitSubset::of(n, {k})));
  }
  return clamp01(sum / n);
}

double scott_measure(const PureState& state, int m) {
  const int n = state.num_qubits();
  if (n < 2 || m < 1 || m > n / 2) {
    throw ConfigError("Scott measure order " + std::to_string(m) + " outside [1, " +
                      std::to_string(n / 2) + "]");
  }
  return clamp01(mean_eta_of_size(state, m));
}

double geometric_mean_or_zero(const std::vector<double>& values, double zero_threshold) {
  if (values.empty()) return 0.0;
  double log_sum = 0.0;
  for (double v : values) {
    const double c = clamp01(v);
    if (c < zero_threshold) return 0.0;
    log_sum += std::log(c);
  }
  return clamp01(std::exp(log_sum / static_cast<double>(values.size())));
}

double global_r(const EtaProfile& profile) {
  return geometric_mean_or_zero(profile.values(), kTolerances.r_zero);
}

double global_r(const PureState& state) { return global_r(eta_profile(state)); }

MeasureReport measure_report(const PureState& state) {
  MeasureReport rep;
  rep.profile = eta_profile(state);
  rep.mw = mw_measure(state);
  for (int m = 1; m <= state.num_qubits() / 2; ++m) rep.scott.push_back(scott_measure(state, m));
  rep.r = global_r(rep.profile);
  return rep;
}

}  // namespace globent
