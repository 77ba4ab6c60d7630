// Copyright 2026 The cvmultipole Authors
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


#include "cvmp/closed_forms.hpp"

#include <gtest/gtest.h>

#include "cvmp/multipoles.hpp"
#include "cvmp/tensor_basis.hpp"
#include "cvmp/weyl_basis.hpp"

namespace cvmp {
namespace {

constexpr int kCoherentCutoff = 70;

std::vector<cplx> sample_alphas() {
  std::vector<cplx> out;
  for (double r2 : {0.0, 0.3, 1.0, 2.5, 4.0, 6.0})
    for (double ph : {0.0, 0.7, 2.9}) out.push_back(std::polar(std::sqrt(r2), ph));
  return out;
}

TEST(CoherentClosed, FrozenValues) {
  const cplx alpha(0.8, 0.3);
  const TensorIndex idx(3, 1);
  EXPECT_LT(std::abs(coherent_multipole_closed(alpha, idx) - cplx(-0.24480976696582282, -0.091803662612183548)),
            1e-14);
  EXPECT_LT(std::abs(coherent_weyl_multipole_closed(alpha, idx) - cplx(-0.40130428273302312, -0.15048910602488366)),
            1e-14);
}

TEST(CoherentClosed, MatchesStripeSums) {
  for (const cplx alpha : sample_alphas()) {
    const auto rho = make_state(CoherentSpec{alpha}, kCoherentCutoff);
    for (const auto& idx : indices_up_to(12)) {
      const cplx s = state_multipole(rho, idx);
      EXPECT_LT(std::abs(coherent_multipole_closed(alpha, idx) - s), 1e-10) << alpha << idx.to_string();
      const cplx w = weyl_state_multipole(rho, idx);
      EXPECT_LT(std::abs(coherent_weyl_multipole_closed(alpha, idx) - w), 1e-10) << alpha << idx.to_string();
    }
  }
}

TEST(CoherentClosed, InverseMatchesTrace) {
  for (const cplx alpha : sample_alphas()) {
    const auto rho = make_state(CoherentSpec{alpha}, kCoherentCutoff - 12).embedded(kCoherentCutoff);
    for (const auto& idx : indices_up_to(12)) {
      const cplx want = coherent_inverse_multipole_closed(alpha, idx);
      EXPECT_LT(std::abs(inverse_multipole(rho, idx) - want), 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(CoherentClosed, WeylAtOrigin) {
  const TensorIndex idx(2, 0);
  EXPECT_DOUBLE_EQ(coherent_weyl_multipole_closed(0.0, idx).real(), -4.0);
  EXPECT_DOUBLE_EQ(inverse_weyl_matrix(idx, 4)(0, 0).real(), -4.0);
  EXPECT_EQ(coherent_multipole_closed(0.0, TensorIndex(3, 1)), cplx(0.0));
}

TEST(CoherentClosed, ConjugatePairsEqualMagnitude) {
  for (double r2 = 0.0; r2 <= 6.0; r2 += 0.5) {
    const cplx alpha = std::polar(std::sqrt(r2), 0.4);
    for (int q2 = 2; q2 <= 10; q2 += 2) {
      EXPECT_EQ(std::abs(coherent_multipole_closed(alpha, TensorIndex(10, q2))),
                std::abs(coherent_multipole_closed(alpha, TensorIndex(10, -q2))));
      EXPECT_EQ(coherent_multipole_closed(alpha, TensorIndex(10, -q2)),
                std::conj(coherent_multipole_closed(alpha, TensorIndex(10, q2))));
    }
  }
}

TEST(FockClosed, MatchesStripeSums) {
  for (int n = 0; n <= 8; ++n) {
    const auto rho = make_state(FockSpec{n}, 20);
    for (const auto& idx : indices_up_to(12)) {
      EXPECT_NEAR(fock_multipole_closed(n, idx), state_multipole(rho, idx).real(), 1e-10);
      const double w = weyl_state_multipole(rho, idx).real();
      EXPECT_NEAR(fock_weyl_multipole_closed(n, idx), w, 1e-10 * std::max(1.0, std::abs(w)));
      EXPECT_NEAR(fock_inverse_multipole_closed(n, idx), inverse_multipole(rho, idx).real(), 1e-10);
    }
  }
}

TEST(FockClosed, Examples) {
  EXPECT_DOUBLE_EQ(fock_multipole_closed(0, TensorIndex(6, 0)), -1.0 / 6.0);
  EXPECT_DOUBLE_EQ(fock_inverse_multipole_closed(2, TensorIndex(2, 0)), 2.0);
  EXPECT_DOUBLE_EQ(fock_weyl_multipole_closed(5, TensorIndex(4, 0)), -244.0);
  EXPECT_EQ(fock_multipole_closed(3, TensorIndex(4, 2)), 0.0);
}

TEST(DyadClosed, MatchesMatrices) {
  const int N = 14;
  for (const auto& idx : indices_up_to(12)) {
    const auto inv = inverse_matrix(idx, N);
    const auto wey = inverse_weyl_matrix(idx, N);
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n) {
        EXPECT_NEAR(dyad_multipole_closed(m, n, idx), inv(m, n).real(), 1e-10);
        const double w = wey(m, n).real();
        EXPECT_NEAR(dyad_weyl_multipole_closed(m, n, idx), w, 1e-10 * std::max(1.0, std::abs(w)))
            << idx.to_string() << " " << m << "," << n;
      }
  }
}

TEST(DyadClosed, Example) { EXPECT_EQ(dyad_multipole_closed(0, 1, TensorIndex(1, 1)), 1.0); }

}  // namespace
}  // namespace cvmp
