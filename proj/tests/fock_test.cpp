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


#include "cvmp/fock.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/special_functions.hpp"
#include "test_util.hpp"

namespace cvmp {
namespace {

TEST(Annihilation, Elements) {
  const auto a = build_annihilation(1);
  EXPECT_EQ(a(0, 1), cplx(1.0));
  EXPECT_EQ(a(0, 0), cplx(0.0));
  EXPECT_EQ(a(1, 0), cplx(0.0));
  EXPECT_EQ(a(1, 1), cplx(0.0));
  const auto v = cvmp::apply(build_annihilation(4), fock_ket(2, 4));
  EXPECT_NEAR(std::abs(v[1] - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(Annihilation, CommutatorBelowCutoff) {
  const int N = 8;
  const auto a = build_annihilation(N);
  const auto ad = build_creation(N);
  const auto c = a * ad - ad * a;
  for (int n = 0; n < N; ++n) EXPECT_NEAR(std::abs(c(n, n) - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(c(N, N).real(), -static_cast<double>(N), 1e-12);
  EXPECT_EQ(ad, a.adjoint());
}

TEST(Number, Diagonal) {
  const auto n = build_number(5);
  EXPECT_LT(max_abs_diff(n, build_creation(5) * build_annihilation(5)), 1e-13);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(n(k, k), cplx(k));
}

TEST(Displacement, Identity) { EXPECT_LT(max_abs_diff(build_displacement(0.0, 6), Matrix::identity(7)), 1e-15); }

TEST(Displacement, VacuumElement) {
  EXPECT_NEAR(build_displacement(1.0, 5)(0, 0).real(), 0.6065306597126334, 1e-15);
}

TEST(Displacement, FirstColumnIsCoherent) {
  const cplx alpha(0.7, -1.1);
  const auto d = build_displacement(alpha, 30);
  for (int n = 0; n <= 30; ++n) EXPECT_LT(std::abs(d(n, 0) - poisson_amplitude(n, alpha)), 1e-14);
}

TEST(Displacement, ApproximatelyUnitaryOnLowLevels) {
  const cplx alpha(0.5, 0.3);
  const auto d = build_displacement(alpha, 50);
  const auto u = d.adjoint() * d;
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c) EXPECT_NEAR(std::abs(u(r, c) - (r == c ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(Displacement, MatchesExponentialGenerator) {
  // D(alpha) a D(alpha)^dagger = a - alpha on low levels
  const cplx alpha(0.4, -0.2);
  const int N = 50;
  const auto d = build_displacement(alpha, N);
  const auto lhs = d * build_annihilation(N) * d.adjoint();
  for (int r = 0; r < 12; ++r)
    for (int c = 0; c < 12; ++c) {
      const cplx want = build_annihilation(N)(r, c) - (r == c ? alpha : 0.0);
      EXPECT_LT(std::abs(lhs(r, c) - want), 1e-12);
    }
}

TEST(Quadrature, Definition) {
  const double th = 0.7;
  const int N = 6;
  const auto want = build_annihilation(N) * std::polar(1.0, -th) + build_creation(N) * std::polar(1.0, th);
  EXPECT_LT(max_abs_diff(build_quadrature(th, N), want), 1e-15);
  EXPECT_EQ(build_quadrature(th, N).hermiticity_defect(), 0.0);
}

TEST(Kets, FockAndCoherent) {
  EXPECT_EQ(fock_ket(2, 3)[2], cplx(1.0));
  EXPECT_THROW(fock_ket(4, 3), TruncationError);
  const cplx alpha(1.0, 1.0);
  EXPECT_NEAR(coherent_truncated_norm(alpha, 60), 1.0, 1e-14);
  const int n = coherent_required_cutoff(alpha);
  EXPECT_GE(coherent_truncated_norm(alpha, n), 1.0 - 1e-8);
  EXPECT_LT(coherent_truncated_norm(alpha, n - 1), 1.0 - 1e-8);
}

TEST(Dyad, SingleEntry) {
  const auto d = dyad(1, 3, 4);
  EXPECT_EQ(d(1, 3), cplx(1.0));
  EXPECT_EQ(d.trace(), cplx(0.0));
  EXPECT_EQ(d.max_abs(), 1.0);
}

TEST(TensorProduct, Examples) {
  EXPECT_EQ(tensor_product(Matrix::identity(3), Matrix::identity(3)), Matrix::identity(9));
  const int N = 3;
  const auto p = tensor_product(dyad(0, 0, N), dyad(1, 1, N));
  EXPECT_EQ(p(joint_index(0, 1, N), joint_index(0, 1, N)), cplx(1.0));
  EXPECT_EQ(p.max_abs(), 1.0);
  double total = 0.0;
  for (const auto& v : p.data()) total += std::abs(v);
  EXPECT_EQ(total, 1.0);
  EXPECT_THROW(tensor_product(Matrix::identity(3), Matrix::identity(4)), ValidationError);
}

TEST(TensorProduct, TraceFactorizes) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto a = testing::random_matrix(rng, 5);
    const auto b = testing::random_matrix(rng, 5);
    EXPECT_LT(std::abs(tensor_product(a, b).trace() - a.trace() * b.trace()), 1e-12 * 25);
  }
}

}  // namespace
}  // namespace cvmp
