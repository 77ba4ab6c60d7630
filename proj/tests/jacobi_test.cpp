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


#include "cvmp/jacobi.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "test_util.hpp"

namespace cvmp {
namespace {

Matrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  const auto g = testing::random_matrix(rng, dim);
  auto h = g + g.adjoint();
  h *= 0.5;
  return h;
}

void expect_valid(const Matrix& a, const EigenDecomposition& e) {
  const double scale = std::max(1.0, a.max_abs());
  for (std::size_t i = 0; i < e.dim; ++i) {
    const auto v = e.vector(i);
    const auto av = cvmp::apply(a, v);
    for (std::size_t r = 0; r < e.dim; ++r) EXPECT_LT(std::abs(av[r] - e.values[i] * v[r]), 1e-9 * scale);
    for (std::size_t j = 0; j < e.dim; ++j)
      EXPECT_LT(std::abs(inner(v, e.vector(j)) - (i == j ? 1.0 : 0.0)), 1e-10);
  }
  EXPECT_TRUE(std::is_sorted(e.values.rbegin(), e.values.rend()));
  Matrix lam(e.dim);
  for (std::size_t i = 0; i < e.dim; ++i) lam(i, i) = e.values[i];
  EXPECT_LT(max_abs_diff(a, e.vectors * lam * e.vectors.adjoint()), 1e-9 * scale);
}

TEST(Jacobi, Identity) {
  const auto e = hermitian_eigensolve(Matrix::identity(5));
  for (double v : e.values) EXPECT_EQ(v, 1.0);
}

TEST(Jacobi, Diagonal) {
  const double d[] = {3.0, 1.0, 2.0};
  const auto e = hermitian_eigensolve(Matrix::diagonal(d));
  EXPECT_EQ(e.values, (std::vector<double>{3.0, 2.0, 1.0}));
}

TEST(Jacobi, NumberOperator) {
  const auto e = hermitian_eigensolve(build_number(5));
  for (int i = 0; i <= 5; ++i) EXPECT_NEAR(e.values[i], 5 - i, 1e-14);
}

TEST(Jacobi, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigensolve(build_annihilation(3)), ValidationError);
}

TEST(Jacobi, RandomHermitianInvariants) {
  std::mt19937_64 rng(17);
  for (std::size_t dim : {1u, 2u, 7u, 20u, 45u}) {
    const auto a = random_hermitian(rng, dim);
    expect_valid(a, hermitian_eigensolve(a));
    expect_valid(a, hermitian_eigensolve_serial(a));
  }
}

TEST(Jacobi, MatchesEigen) {
  std::mt19937_64 rng(23);
  const std::size_t dim = 30;
  const auto a = random_hermitian(rng, dim);
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = a(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const auto e = hermitian_eigensolve(a);
  for (std::size_t i = 0; i < dim; ++i) EXPECT_NEAR(e.values[i], es.eigenvalues()[dim - 1 - i], 1e-11);
}

TEST(Jacobi, DegenerateSpectrum) {
  Matrix a(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = 1.0;
  const auto e = hermitian_eigensolve(a);
  EXPECT_NEAR(e.values[0], 6.0, 1e-13);
  for (int i = 1; i < 6; ++i) EXPECT_NEAR(e.values[i], 0.0, 1e-13);
  expect_valid(a, e);
}

}  // namespace
}  // namespace cvmp
