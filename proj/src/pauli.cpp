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

#include "globent/pauli.hpp"

#include <bit>
#include <cmath>
#include <utility>

#include "globent/errors.hpp"

namespace globent {

namespace {

struct WordMasks {
  std::uint32_t flip = 0;   // X or Y: off-diagonal on that qubit
  std::uint32_t sign = 0;   // Y or Z: -1 on |1>
  int num_y = 0;
};

WordMasks masks_of(std::size_t word_index, int n) {
  WordMasks m;
  for (int k = 0; k < n; ++k) {
    const auto letter = static_cast<Pauli>((word_index >> (2 * k)) & 3u);
    if (letter == Pauli::X || letter == Pauli::Y) m.flip |= 1u << k;
    if (letter == Pauli::Y || letter == Pauli::Z) m.sign |= 1u << k;
    if (letter == Pauli::Y) ++m.num_y;
  }
  return m;
}

// i^k
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// sigma_L[col ^ flip][col] = i^{#Y} (-1)^{popcount(col & sign)}
double sign_of(std::size_t col, std::uint32_t sign) {
  return (std::popcount(col & sign) & 1) ? -1.0 : 1.0;
}

std::size_t four_pow(int k) { return std::size_t{1} << (2 * k); }

// Spreads the base-4 digits of a reduced word onto the kept qubit positions.
std::size_t embed_word(std::size_t reduced, std::uint32_t kept) {
  std::size_t out = 0;
  int pos = 0;
  for (std::uint32_t m = kept; m != 0; m &= m - 1) {
    const int bit = __builtin_ctz(m);
    out |= ((reduced >> (2 * pos++)) & 3u) << (2 * bit);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PauliWord

PauliWord::PauliWord(std::vector<Pauli> letters) : letters_(std::move(letters)) {
  detail::require_qubit_count(num_qubits());
}

PauliWord::PauliWord(int num_qubits, std::size_t index) {
  detail::require_qubit_count(num_qubits);
  if (index >= four_pow(num_qubits)) throw DimensionError("Pauli word index out of range");
  letters_.reserve(static_cast<std::size_t>(num_qubits));
  for (int k = 0; k < num_qubits; ++k) {
    letters_.push_back(static_cast<Pauli>((index >> (2 * k)) & 3u));
  }
}

PauliWord PauliWord::parse(const std::string& text) {
  std::vector<Pauli> letters(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    Pauli p;
    switch (text[i]) {
      case 'I': case 'i': case '0': p = Pauli::I; break;
      case 'X': case 'x': case '1': p = Pauli::X; break;
      case 'Y': case 'y': case '2': p = Pauli::Y; break;
      case 'Z': case 'z': case '3': p = Pauli::Z; break;
      default: throw ParseError("invalid Pauli letter '" + std::string(1, text[i]) + "'");
    }
    letters[text.size() - 1 - i] = p;
  }
  return PauliWord(std::move(letters));
}

std::size_t PauliWord::index() const noexcept {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    idx |= static_cast<std::size_t>(letters_[k]) << (2 * k);
  }
  return idx;
}

std::string PauliWord::str() const {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) s += kNames[static_cast<int>(*it)];
  return s;
}

bool PauliWord::is_identity() const noexcept {
  for (Pauli p : letters_) {
    if (p != Pauli::I) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PauliExpansion

PauliExpansion::PauliExpansion(int num_qubits, std::vector<double> coeffs)
    : n_(num_qubits), coeffs_(std::move(coeffs)) {
  detail::require_qubit_count(num_qubits);
  if (coeffs_.size() != four_pow(num_qubits)) {
    throw DimensionError("expansion needs 4^n coefficients");
  }
}

Complex pauli_expectation(const DensityMatrix& rho, std::size_t word_index) {
  const int n = rho.num_qubits();
  const WordMasks m = masks_of(word_index, n);
  const auto& r = rho.entries();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t col = 0; col < rho.dim(); ++col) {
    // Tr[rho sigma] = sum_col rho[col][row] sigma[row][col], row = col ^ flip
    const Complex v = r(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col ^ m.flip));
    const double s = sign_of(col, m.sign);
    re += s * v.real();
    im += s * v.imag();
  }
  return Complex(re, im) * i_power(m.num_y);
}

PauliExpansion pauli_expand(const DensityMatrix& rho) {
  const int n = rho.num_qubits();
  std::vector<double> coeffs(four_pow(n));
  coeffs[0] = 1.0;
  for (std::size_t w = 1; w < coeffs.size(); ++w) coeffs[w] = pauli_expectation(rho, w).real();
  return PauliExpansion(n, std::move(coeffs));
}

PauliExpansion pauli_expand_on(const DensityMatrix& rho, const QubitSubset& keep) {
  if (keep.empty()) throw EmptySubset("reduced expansion must keep at least one qubit");
  if (keep.num_qubits() != rho.num_qubits()) throw DimensionError("subset and state sizes differ");
  std::vector<double> coeffs(four_pow(keep.size()));
  coeffs[0] = 1.0;
  for (std::size_t w = 1; w < coeffs.size(); ++w) {
    coeffs[w] = pauli_expectation(rho, embed_word(w, keep.mask())).real();
  }
  return PauliExpansion(keep.size(), std::move(coeffs));
}

PauliExpansion reduced_from_pauli(const PauliExpansion& expansion, const QubitSubset& keep) {
  if (keep.empty()) throw EmptySubset("reduced expansion must keep at least one qubit");
  if (keep.num_qubits() != expansion.num_qubits()) throw DimensionError("subset and state sizes differ");
  std::vector<double> coeffs(four_pow(keep.size()));
  coeffs[0] = 1.0;
  for (std::size_t w = 1; w < coeffs.size(); ++w) coeffs[w] = expansion[embed_word(w, keep.mask())];
  return PauliExpansion(keep.size(), std::move(coeffs));
}

DensityMatrix density_from_pauli(const PauliExpansion& expansion) {
  const int n = expansion.num_qubits();
  const std::size_t d = std::size_t{1} << n;
  const double scale = 1.0 / static_cast<double>(d);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t w = 0; w < expansion.size(); ++w) {
    const double a = expansion[w];
    if (a == 0.0) continue;
    const WordMasks m = masks_of(w, n);
    const Complex phase = i_power(m.num_y) * (a * scale);
    for (std::size_t col = 0; col < d; ++col) {
      rho(static_cast<Eigen::Index>(col ^ m.flip), static_cast<Eigen::Index>(col)) +=
          phase * sign_of(col, m.sign);
    }
  }
  return DensityMatrix(n, std::move(rho));
}

std::vector<std::size_t> support_words(const QubitSubset& keep) {
  std::vector<std::size_t> out;
  const std::size_t count = four_pow(keep.size());
  out.reserve(count - 1);
  for (std::size_t w = 1; w < count; ++w) out.push_back(embed_word(w, keep.mask()));
  return out;
}

}  // namespace globent
