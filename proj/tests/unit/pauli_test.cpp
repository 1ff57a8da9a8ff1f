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

#include <cmath>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace globent;
using namespace globent::testing;

namespace {

// Tr[rho sigma_L] with sigma_L assembled by Kronecker products: O(16^n).
double oracle_alpha(const DensityMatrix& rho, std::size_t word) {
  const Complex t = (rho.entries() * pauli_operator(rho.num_qubits(), word)).trace();
  EXPECT_LT(std::abs(t.imag()), 1e-12);
  return t.real();
}

double alpha(const PauliExpansion& e, const char* word) { return e[PauliWord::parse(word)]; }

}  // namespace

TEST(PauliWord, IndexAndText) {
  const PauliWord w = PauliWord::parse("XZ");  // X on qubit 2, Z on qubit 1
  EXPECT_EQ(w.letter(1), Pauli::Z);
  EXPECT_EQ(w.letter(2), Pauli::X);
  EXPECT_EQ(w.index(), 3u + (1u << 2));
  EXPECT_EQ(w.str(), "XZ");
  EXPECT_EQ(PauliWord(2, w.index()).str(), "XZ");
  EXPECT_EQ(PauliWord::parse("0123").str(), "IXYZ");
  EXPECT_TRUE(PauliWord::parse("II").is_identity());
  EXPECT_THROW(PauliWord::parse("XQ"), ParseError);
}

TEST(PauliExpand, BellStateAgainstTraceOracle) {
  const DensityMatrix bell = to_density(fixture("ghz", 2));
  const PauliExpansion e = pauli_expand(bell);
  for (std::size_t w = 0; w < 16; ++w) EXPECT_NEAR(e[w], oracle_alpha(bell, w), 1e-14) << PauliWord(2, w).str();
  EXPECT_DOUBLE_EQ(alpha(e, "II"), 1.0);
  EXPECT_NEAR(alpha(e, "XX"), 1.0, 1e-15);
  EXPECT_NEAR(alpha(e, "YY"), -1.0, 1e-15);
  EXPECT_NEAR(alpha(e, "ZZ"), 1.0, 1e-15);
  for (const char* w : {"ZI", "IZ", "XI", "IX", "YI", "IY"}) EXPECT_NEAR(alpha(e, w), 0.0, 1e-15) << w;
}

TEST(PauliExpand, SingleQubitExamples) {
  const PauliExpansion mixed = pauli_expand(DensityMatrix(1, Eigen::MatrixXcd::Identity(2, 2) * 0.5));
  EXPECT_EQ(mixed[0], 1.0);
  for (std::size_t w = 1; w < 4; ++w) EXPECT_NEAR(mixed[w], 0.0, 1e-15);

  const PauliExpansion zero = pauli_expand(to_density(basis_state(1, 0)));
  EXPECT_NEAR(alpha(zero, "Z"), 1.0, 1e-15);
  EXPECT_NEAR(alpha(zero, "X"), 0.0, 1e-15);
  EXPECT_NEAR(alpha(zero, "Y"), 0.0, 1e-15);
}

TEST(PauliExpand, YConvention) {
  // |+i> = (|0> + i|1>)/sqrt2 has <Y> = +1.
  Eigen::VectorXcd v(2);
  v << 1.0, Complex(0.0, 1.0);
  const PauliExpansion e = pauli_expand(to_density(normalize(PureState(1, v))));
  EXPECT_NEAR(alpha(e, "Y"), 1.0, 1e-15);
}

TEST(PauliExpand, RandomStatesAgainstOracle) {
  Rng rng(41);
  for (int n = 1; n <= 3; ++n) {
    const DensityMatrix rho = random_hermitian_unit_trace(n, rng);
    const PauliExpansion e = pauli_expand(rho);
    for (std::size_t w = 1; w < e.size(); ++w) EXPECT_NEAR(e[w], oracle_alpha(rho, w), 1e-12);
  }
}

TEST(PauliExpand, RoundTripReconstructsDensity) {
  Rng rng(43);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const DensityMatrix rho = random_hermitian_unit_trace(n, rng);
      const DensityMatrix back = density_from_pauli(pauli_expand(rho));
      EXPECT_LT(max_abs_diff(back.entries(), rho.entries()), 1e-10) << "n=" << n;
    }
  }
}

TEST(PauliExpand, PurityIdentity) {
  Rng rng(47);
  for (int n = 1; n <= 4; ++n) {
    const DensityMatrix rho = to_density(random_state(n, rng));
    const PauliExpansion e = pauli_expand(rho);
    double sum = 0.0;
    for (double a : e.coefficients()) sum += a * a;
    EXPECT_NEAR(std::ldexp(sum, -n), purity(rho), 1e-12);
  }
}

TEST(ReducedFromPauli, Examples) {
  const PauliExpansion bell = pauli_expand(to_density(fixture("ghz", 2)));
  const PauliExpansion r = reduced_from_pauli(bell, QubitSubset::of(2, {1}));
  EXPECT_EQ(r.num_qubits(), 1);
  EXPECT_EQ(r[0], 1.0);
  for (std::size_t w = 1; w < 4; ++w) EXPECT_NEAR(r[w], 0.0, 1e-15);

  const PauliExpansion zz = pauli_expand(to_density(basis_state(2, 0)));
  EXPECT_NEAR(alpha(reduced_from_pauli(zz, QubitSubset::of(2, {2})), "Z"), 1.0, 1e-15);

  std::vector<double> identity(std::size_t{1} << 6, 0.0);
  identity[0] = 1.0;
  const PauliExpansion id(3, identity);
  const PauliExpansion red = reduced_from_pauli(id, QubitSubset::of(3, {1, 3}));
  for (std::size_t w = 1; w < red.size(); ++w) EXPECT_EQ(red[w], 0.0);

  EXPECT_THROW(reduced_from_pauli(bell, QubitSubset(2, 0)), EmptySubset);
}

TEST(ReducedFromPauli, CommutesWithPartialTrace) {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const DensityMatrix rho = to_density(random_state(n, rng));
    const QubitSubset keep = random_block(n, rng);
    const PauliExpansion via_trace = pauli_expand(partial_trace(rho, keep));
    const PauliExpansion via_words = reduced_from_pauli(pauli_expand(rho), keep);
    const PauliExpansion direct = pauli_expand_on(rho, keep);
    for (std::size_t w = 0; w < via_trace.size(); ++w) {
      EXPECT_NEAR(via_trace[w], via_words[w], 1e-10);
      EXPECT_NEAR(direct[w], via_words[w], 1e-12);
    }
    EXPECT_LT(max_abs_diff(density_from_pauli(via_words).entries(), partial_trace(rho, keep).entries()), 1e-10);
  }
}

TEST(SupportWords, CountAndSupport) {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const QubitSubset s(n, mask);
      const auto words = support_words(s);
      EXPECT_EQ(words.size(), (std::size_t{1} << (2 * s.size())) - 1);
      for (std::size_t w : words) {
        const PauliWord pw(n, w);
        EXPECT_FALSE(pw.is_identity());
        for (int k = 1; k <= n; ++k) {
          if (!s.contains(k)) EXPECT_EQ(pw.letter(k), Pauli::I);
        }
      }
    }
  }
  // Two qubits out of four need 15 observables.
  EXPECT_EQ(support_words(QubitSubset::of(4, {1, 2})).size(), 15u);
}
