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

#include "globent/qstate.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <utility>

#include "globent/errors.hpp"

namespace globent {

namespace detail {
void require_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxQubits) + "]");
  }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// QubitSubset

QubitSubset::QubitSubset(int num_qubits, std::uint32_t mask) : n_(num_qubits), mask_(mask) {
  detail::require_qubit_count(num_qubits);
  if ((mask >> num_qubits) != 0) {
    throw DimensionError("subset mask names qubits beyond " + std::to_string(num_qubits));
  }
}

QubitSubset QubitSubset::of(int num_qubits, std::initializer_list<int> qubits) {
  return of(num_qubits, std::vector<int>(qubits));
}

QubitSubset QubitSubset::of(int num_qubits, const std::vector<int>& qubits) {
  std::uint32_t mask = 0;
  for (int q : qubits) {
    if (q < 1 || q > num_qubits) {
      throw DimensionError("qubit label " + std::to_string(q) + " outside [1, " +
                           std::to_string(num_qubits) + "]");
    }
    mask |= 1u << (q - 1);
  }
  return QubitSubset(num_qubits, mask);
}

QubitSubset QubitSubset::full(int num_qubits) {
  detail::require_qubit_count(num_qubits);
  return QubitSubset(num_qubits, (1u << num_qubits) - 1u);
}

int QubitSubset::size() const noexcept { return std::popcount(mask_); }

bool QubitSubset::is_full() const noexcept { return mask_ == (1u << n_) - 1u; }

bool QubitSubset::contains(int qubit) const noexcept {
  return qubit >= 1 && qubit <= n_ && ((mask_ >> (qubit - 1)) & 1u);
}

QubitSubset QubitSubset::complement() const {
  return QubitSubset(n_, (~mask_) & ((1u << n_) - 1u));
}

std::vector<int> QubitSubset::qubits() const {
  std::vector<int> out;
  for (int k = 1; k <= n_; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string QubitSubset::label() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int q : qubits()) {
    if (!first) os << ',';
    os << q;
    first = false;
  }
  os << '}';
  return os.str();
}

void QubitSubset::require_block() const {
  if (empty()) throw EmptySubset("subset is empty");
  if (is_full()) throw FullSubset("subset contains every qubit");
}

// ---------------------------------------------------------------------------
// PureState / DensityMatrix

PureState::PureState(int num_qubits, Eigen::VectorXcd amps) : n_(num_qubits), amps_(std::move(amps)) {
  detail::require_qubit_count(num_qubits);
  if (amps_.size() != (Eigen::Index{1} << num_qubits)) {
    throw DimensionError("expected " + std::to_string(1u << num_qubits) + " amplitudes, got " +
                         std::to_string(amps_.size()));
  }
}

PureState PureState::basis(int num_qubits, std::size_t index) {
  detail::require_qubit_count(num_qubits);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
  if (index >= static_cast<std::size_t>(v.size())) throw DimensionError("basis index out of range");
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(num_qubits, std::move(v));
}

DensityMatrix::DensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : m_(num_qubits), rho_(std::move(entries)) {
  detail::require_qubit_count(num_qubits);
  const Eigen::Index d = Eigen::Index{1} << num_qubits;
  if (rho_.rows() != d || rho_.cols() != d) {
    throw DimensionError("density matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
}

void DensityMatrix::validate(const Tolerances& tol, bool check_psd) const {
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.equality) {
    throw NumericalError("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > tol.equality) {
    throw NumericalError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  if (check_psd) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.psd) {
      throw NumericalError("density matrix has a negative eigenvalue");
    }
  }
}

// ---------------------------------------------------------------------------
// Operations

PureState normalize(const PureState& state) {
  const double n2 = state.norm_squared();
  if (!(n2 > kTolerances.zero_norm)) throw ZeroState("cannot normalize a zero state");
  return PureState(state.num_qubits(), state.amplitudes() / std::sqrt(n2));
}

DensityMatrix to_density(const PureState& state) {
  const auto& a = state.amplitudes();
  return DensityMatrix(state.num_qubits(), a * a.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
  if (keep.empty()) throw EmptySubset("partial trace must keep at least one qubit");
  if (keep.num_qubits() != rho.num_qubits()) throw DimensionError("subset and state sizes differ");
  if (keep.is_full()) return rho;

  const std::uint32_t kept = keep.mask();
  const std::uint32_t traced = keep.complement().mask();
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << (rho.num_qubits() - keep.size());
  const auto& r = rho.entries();

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    const std::size_t ii = detail::scatter_bits(i, kept);
    for (std::size_t j = 0; j < dk; ++j) {
      const std::size_t jj = detail::scatter_bits(j, kept);
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t tt = detail::scatter_bits(t, traced);
        acc += r(static_cast<Eigen::Index>(ii | tt), static_cast<Eigen::Index>(jj | tt));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix(keep.size(), std::move(out));
}

namespace {
// Amplitudes reshaped into a (kept x traced) matrix.
Eigen::MatrixXcd split_amplitudes(const PureState& state, const QubitSubset& keep) {
  const std::uint32_t kept = keep.mask();
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = state.dim() / dk;
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dt));
  const std::uint32_t traced = (~kept) & ((1u << state.num_qubits()) - 1u);
  for (std::size_t b = 0; b < state.dim(); ++b) {
    m(static_cast<Eigen::Index>(detail::gather_bits(b, kept)),
      static_cast<Eigen::Index>(detail::gather_bits(b, traced))) = state[b];
  }
  return m;
}
}  // namespace

DensityMatrix reduced_density(const PureState& state, const QubitSubset& keep) {
  if (keep.empty()) throw EmptySubset("partial trace must keep at least one qubit");
  if (keep.num_qubits() != state.num_qubits()) throw DimensionError("subset and state sizes differ");
  const Eigen::MatrixXcd m = split_amplitudes(state, keep);
  return DensityMatrix(keep.size(), m * m.adjoint());
}

double purity(const DensityMatrix& rho) { return rho.entries().squaredNorm(); }

double reduced_purity(const PureState& state, const QubitSubset& keep) {
  if (keep.empty()) throw EmptySubset("partial trace must keep at least one qubit");
  if (keep.num_qubits() != state.num_qubits()) throw DimensionError("subset and state sizes differ");
  const Eigen::MatrixXcd m = split_amplitudes(state, keep);
  // Tr[(M M^dag)^2] = Tr[(M^dag M)^2]; use whichever Gram matrix is smaller.
  if (m.rows() <= m.cols()) return (m * m.adjoint()).squaredNorm();
  return (m.adjoint() * m).squaredNorm();
}

PureState apply_single_qubit(const PureState& state, int qubit, const Eigen::Matrix2cd& u) {
  if (qubit < 1 || qubit > state.num_qubits()) throw DimensionError("qubit label out of range");
  const std::size_t bit = std::size_t{1} << (qubit - 1);
  Eigen::VectorXcd out = state.amplitudes();
  for (std::size_t b = 0; b < state.dim(); ++b) {
    if (b & bit) continue;
    const Complex a0 = state[b];
    const Complex a1 = state[b | bit];
    out(static_cast<Eigen::Index>(b)) = u(0, 0) * a0 + u(0, 1) * a1;
    out(static_cast<Eigen::Index>(b | bit)) = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return PureState(state.num_qubits(), std::move(out));
}

PureState tensor(const PureState& high, const PureState& low) {
  const int n = high.num_qubits() + low.num_qubits();
  detail::require_qubit_count(n);
  Eigen::VectorXcd out(Eigen::Index{1} << n);
  for (std::size_t h = 0; h < high.dim(); ++h) {
    for (std::size_t l = 0; l < low.dim(); ++l) {
      out(static_cast<Eigen::Index>((h << low.num_qubits()) | l)) = high[h] * low[l];
    }
  }
  return PureState(n, std::move(out));
}

}  // namespace globent
