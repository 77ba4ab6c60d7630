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


#include "cvmp/algebra.hpp"

#include <gtest/gtest.h>

#include "cvmp/fock.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/tensor_basis.hpp"
#include "cvmp/tensor_index.hpp"

namespace cvmp {
namespace {

constexpr int kN = 12;

TEST(Structure, VanishingExample) {
  const TensorIndex h(1, 1);
  EXPECT_TRUE(product_vanishes_by_rule(h, h));
  EXPECT_TRUE(product_expansion(h, h).empty());
  EXPECT_EQ((inverse_matrix(h, kN) * inverse_matrix(h, kN)).max_abs(), 0.0);
}

TEST(Structure, VacuumIdempotent) {
  const auto e = product_expansion(TensorIndex(0, 0), TensorIndex(0, 0));
  ASSERT_EQ(e.terms.size(), 1u);
  EXPECT_EQ(e.terms[0].k2, 0);
  EXPECT_DOUBLE_EQ(e.terms[0].coefficient, 1.0);
}

TEST(Structure, SquareOfFirstOrder) {
  // (|1><1| - |0><0|)^2 = 2 T00 + T10 in inverse operators
  const auto e = product_expansion(TensorIndex(2, 0), TensorIndex(2, 0));
  EXPECT_EQ(e.q2, 0);
  std::map<int, double> got;
  for (const auto& t : e.terms) got[t.k2] += t.coefficient;
  EXPECT_NEAR(got[0], 2.0, 1e-14);
  EXPECT_NEAR(got[2], 1.0, 1e-14);
  EXPECT_NEAR(got[4], 0.0, 1e-14);
  EXPECT_LT(max_abs_diff(assemble(e, 10), dyad(0, 0, 10) + dyad(1, 1, 10)), 1e-14);
}

TEST(Structure, ReconstructionAllPairs) {
  double worst = 0.0;
  for (const auto& a : indices_up_to(4))
    for (const auto& b : indices_up_to(4)) {
      const auto direct = inverse_matrix(a, kN) * inverse_matrix(b, kN);
      const auto e = product_expansion(a, b);
      EXPECT_EQ(e.q2, a.q2() + b.q2());
      worst = std::max(worst, max_abs_diff(assemble(e, kN), direct));
    }
  EXPECT_LT(worst, 1e-10);
}

TEST(Structure, VanishingRuleExact) {
  int covered = 0;
  for (const auto& a : indices_up_to(6))
    for (const auto& b : indices_up_to(6)) {
      if (!product_vanishes_by_rule(a, b)) continue;
      ++covered;
      EXPECT_EQ((inverse_matrix(a, kN) * inverse_matrix(b, kN)).max_abs(), 0.0) << a.to_string() << b.to_string();
      EXPECT_TRUE(product_expansion(a, b).empty());
    }
  EXPECT_GT(covered, 20);
}

TEST(Structure, TopCoefficientAndBound) {
  for (const auto& a : indices_up_to(6))
    for (const auto& b : indices_up_to(6)) {
      if (a.q2() < 0 || b.q2() < 0 || product_vanishes_by_rule(a, b)) continue;
      const auto e = product_expansion(a, b);
      const auto top = structure_top_coefficient(a, b);
      const int bound = std::min(a.k2() + b.q2(), b.k2() - a.q2());
      EXPECT_EQ(top.k2, bound);
      int hi = -1;
      double hi_coef = 0.0;
      for (const auto& t : e.terms) {
        EXPECT_LE(t.k2, bound);
        if (t.k2 > hi && t.coefficient != 0.0) {
          hi = t.k2;
          hi_coef = t.coefficient;
        }
      }
      EXPECT_EQ(hi, top.k2) << a.to_string() << " " << b.to_string();
      EXPECT_NEAR(hi_coef, top.coefficient, 1e-12 * std::abs(top.coefficient));
    }
}

TEST(Structure, DualityProjection) {
  // coefficient of T^inv_{K''} equals Tr(P T_{K''})
  for (const auto& a : indices_up_to(4))
    for (const auto& b : indices_up_to(4)) {
      const auto direct = inverse_matrix(a, kN) * inverse_matrix(b, kN);
      for (const auto& t : product_expansion(a, b).terms) {
        const cplx proj = kernels::trace_product(direct, monomial_matrix(TensorIndex(t.k2, a.q2() + b.q2()), kN));
        EXPECT_NEAR(proj.real(), t.coefficient, 1e-10);
      }
    }
}

TEST(Displacement, MonomialAnnihilator) {
  const cplx alpha(0.6, -0.3);
  const auto terms = displaced_monomial_expansion(alpha, TensorIndex(1, -1));
  ASSERT_EQ(terms.size(), 2u);
  const int N = 8;
  EXPECT_LT(max_abs_diff(assemble_monomials(terms, N), build_annihilation(N) - alpha * Matrix::identity(N + 1)),
            1e-15);
}

TEST(Displacement, ZeroShift) {
  for (const auto& idx : indices_up_to(4)) {
    const auto m = displaced_monomial_expansion(0.0, idx);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0].index, idx);
    EXPECT_EQ(m[0].coefficient, cplx(1.0));
    const auto v = displaced_inverse_expansion(0.0, idx, 10);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].index, idx);
    EXPECT_EQ(v[0].coefficient, cplx(1.0));
  }
}

TEST(Displacement, NumberOperatorConstantTerm) {
  const auto terms = displaced_monomial_expansion(1.0, TensorIndex(2, 0));
  bool found = false;
  for (const auto& t : terms)
    if (t.index == TensorIndex(0, 0)) {
      EXPECT_EQ(t.coefficient, cplx(1.0));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Displacement, MonomialsMatchConjugation) {
  const cplx alpha(0.4, 0.25);
  for (const auto& idx : indices_up_to(4)) {
    const int N = 3 * idx.k2() / 2 + 10;
    const int big = N + 40;
    const auto d = build_displacement(alpha, big);
    const auto want = (d * monomial_matrix(idx, big) * d.adjoint()).resized(N + 1);
    const auto got = assemble_monomials(displaced_monomial_expansion(alpha, idx), N);
    EXPECT_LT(max_abs_diff(got, want), 1e-8) << idx.to_string();
  }
}

TEST(Displacement, InverseFirstOrderTerm) {
  for (const auto& t : displaced_inverse_expansion(1.0, TensorIndex(0, 0), 1))
    if (t.index == TensorIndex(1, 1)) EXPECT_EQ(t.coefficient, cplx(1.0));
}

TEST(Displacement, InverseSeriesConverges) {
  const cplx alpha = std::polar(0.5, 0.9);
  const int N = 40;
  const auto d = build_displacement(alpha, N);
  for (const auto& idx : indices_up_to(2)) {
    const auto want = d * inverse_matrix(idx, N) * d.adjoint();
    double prev = INFINITY;
    for (int s2max : {10, 20, 30, 40}) {
      const double err = max_abs_diff(assemble_inverses(displaced_inverse_expansion(alpha, idx, s2max), N), want);
      if (s2max == 40) EXPECT_LT(err, 1e-8) << idx.to_string();
      EXPECT_LE(err, prev);
      prev = err;
    }
  }
}

}  // namespace
}  // namespace cvmp
