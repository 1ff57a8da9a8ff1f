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
 * @file pauli.hpp
 * Expansion of density matrices in the basis of n-fold tensor products of
 * {I, X, Y, Z}.
 *
 * A word assigns a letter in {0,1,2,3} = {I,X,Y,Z} to each qubit. Words are
 * stored as base-4 integers with the letter of qubit k in digit k-1, so the
 * same LSB-first convention as basis indices applies.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "globent/qstate.hpp"

namespace globent {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

class PauliWord {
 public:
  /// letters[k-1] is the letter of qubit k.
  explicit PauliWord(std::vector<Pauli> letters);
  PauliWord(int num_qubits, std::size_t index);
  /// Parses a string written qubit n first, e.g. "XZ" is X on qubit 2, Z on qubit 1.
  /// Accepts I/X/Y/Z or 0/1/2/3.
  static PauliWord parse(const std::string& text);

  int num_qubits() const noexcept { return static_cast<int>(letters_.size()); }
  Pauli letter(int qubit) const { return letters_.at(static_cast<std::size_t>(qubit - 1)); }
  std::size_t index() const noexcept;
  /// Qubit n first, matching the tensor order sigma_{L_n} x ... x sigma_{L_1}.
  std::string str() const;
  bool is_identity() const noexcept;

 private:
  std::vector<Pauli> letters_;
};

/// Real coefficients alpha_L = Tr[rho sigma_L] for all 4^n words.
class PauliExpansion {
 public:
  PauliExpansion(int num_qubits, std::vector<double> coeffs);

  int num_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t word_index) const { return coeffs_.at(word_index); }
  double operator[](const PauliWord& w) const { return coeffs_.at(w.index()); }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

/// Tr[rho sigma_L] for a single word, in O(2^n).
Complex pauli_expectation(const DensityMatrix& rho, std::size_t word_index);

/// Full table; alpha of the identity word is set to exactly 1.
PauliExpansion pauli_expand(const DensityMatrix& rho);

/// Coefficients of only the words supported on `keep`, returned as the
/// |S|-qubit expansion of rho_S. Equivalent to
/// reduced_from_pauli(pauli_expand(rho), keep) at 4^|S| word evaluations.
PauliExpansion pauli_expand_on(const DensityMatrix& rho, const QubitSubset& keep);

/// The |S|-qubit expansion of rho_S obtained by restricting to words that are
/// the identity on every traced qubit.
PauliExpansion reduced_from_pauli(const PauliExpansion& expansion, const QubitSubset& keep);

/// rho = 2^-n sum_L alpha_L sigma_L.
DensityMatrix density_from_pauli(const PauliExpansion& expansion);

/// Full-register word indices supported on `keep`, identity word excluded
/// (the set B_S). Has 4^|S| - 1 elements.
std::vector<std::size_t> support_words(const QubitSubset& keep);

}  // namespace globent
