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
 * @file qstate.hpp
 * Dense n-qubit pure states, density matrices and qubit subsets.
 *
 * Qubit k (1-based) is bit k-1 of a computational basis index, so the basis
 * ket |b_n ... b_1> has index sum_k b_k 2^(k-1). Reduced states keep their
 * qubits in ascending original order: the lowest kept qubit becomes bit 0.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "globent/tolerances.hpp"

namespace globent {

using Complex = std::complex<double>;

/// Set of qubits named by a bitmask; bit k-1 is set iff qubit k is a member.
class QubitSubset {
 public:
  QubitSubset(int num_qubits, std::uint32_t mask);

  /// Builds a subset from 1-based qubit labels.
  static QubitSubset of(int num_qubits, std::initializer_list<int> qubits);
  static QubitSubset of(int num_qubits, const std::vector<int>& qubits);
  static QubitSubset full(int num_qubits);

  int num_qubits() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool is_full() const noexcept;
  bool contains(int qubit) const noexcept;

  QubitSubset complement() const;
  /// 1-based labels in ascending order.
  std::vector<int> qubits() const;
  /// "{1,2}" style label.
  std::string label() const;

  /// Throws EmptySubset or FullSubset unless this is a proper bipartition block.
  void require_block() const;

  friend bool operator==(const QubitSubset&, const QubitSubset&) = default;

 private:
  int n_;
  std::uint32_t mask_;
};

/// Complex amplitude vector of length 2^n. Not necessarily normalized.
class PureState {
 public:
  PureState(int num_qubits, Eigen::VectorXcd amps);

  static PureState basis(int num_qubits, std::size_t index);

  int num_qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
  double norm_squared() const { return amps_.squaredNorm(); }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

/// 2^m x 2^m complex matrix. Validation is explicit via `validate`.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, Eigen::MatrixXcd entries);

  int num_qubits() const noexcept { return m_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return rho_; }

  /// Checks Hermiticity, unit trace and (optionally) positivity.
  /// Throws NumericalError describing the first violated invariant.
  void validate(const Tolerances& tol = kTolerances, bool check_psd = false) const;

 private:
  int m_;
  Eigen::MatrixXcd rho_;
};

/// Returns amps / |amps|. Throws ZeroState for a (numerically) zero vector.
PureState normalize(const PureState& state);

DensityMatrix to_density(const PureState& state);

/// Reduced state of the qubits in `keep`. Throws EmptySubset if keep is empty.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);

/// Reduced state of a pure state, computed as M M^dagger with M the
/// (kept x traced) reshaping of the amplitudes.
DensityMatrix reduced_density(const PureState& state, const QubitSubset& keep);

/// Tr[rho^2].
double purity(const DensityMatrix& rho);

/// Tr[rho_S^2] of a pure state without forming the full density matrix.
double reduced_purity(const PureState& state, const QubitSubset& keep);

/// Applies a 2x2 matrix to one qubit (1-based).
PureState apply_single_qubit(const PureState& state, int qubit, const Eigen::Matrix2cd& u);

/// Tensor product with `low` occupying the least-significant qubits.
PureState tensor(const PureState& high, const PureState& low);

namespace detail {
/// Gathers the bits of `index` selected by `mask` into a dense integer.
inline std::size_t gather_bits(std::size_t index, std::uint32_t mask) {
  std::size_t out = 0;
  int pos = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    const int bit = __builtin_ctz(m);
    out |= ((index >> bit) & 1u) << pos++;
  }
  return out;
}

/// Inverse of gather_bits: spreads the low bits of `packed` onto `mask`.
inline std::size_t scatter_bits(std::size_t packed, std::uint32_t mask) {
  std::size_t out = 0;
  int pos = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    const int bit = __builtin_ctz(m);
    out |= ((packed >> pos++) & 1u) << bit;
  }
  return out;
}

void require_qubit_count(int n);
}  // namespace detail

}  // namespace globent
