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


#include "cvmp/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cvmp/errors.hpp"

namespace cvmp {
namespace {

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1.0);
  EXPECT_EQ(factorial(5), 120.0);
  EXPECT_EQ(factorial(20), 2432902008176640000.0);
}

TEST(Factorial, NegativeThrows) {
  EXPECT_THROW(factorial(-1), DomainError);
  EXPECT_THROW(ln_factorial(-3), DomainError);
}

TEST(Factorial, OverflowGuard) {
  EXPECT_TRUE(std::isfinite(factorial(170)));
  EXPECT_TRUE(std::isfinite(ln_factorial(170)));
  EXPECT_THROW(factorial(171), std::overflow_error);
  EXPECT_NEAR(ln_factorial(171), ln_factorial(170) + std::log(171.0), 1e-12);
}

TEST(Factorial, LogRatioRecoversN) {
  for (int n = 1; n <= 170; ++n)
    EXPECT_NEAR(std::exp(ln_factorial(n) - ln_factorial(n - 1)), n, 1e-12 * n) << n;
}

TEST(Factorial, LnMatchesLgamma) {
  for (int n : {0, 1, 7, 40, 170, 500, 5000})
    EXPECT_NEAR(ln_factorial(n), std::lgamma(n + 1.0), 1e-14 * std::max(1.0, std::lgamma(n + 1.0)));
}

TEST(Binomial, Generalized) {
  EXPECT_EQ(binomial(5, 2), 10.0);
  EXPECT_EQ(binomial(5, 7), 0.0);
  EXPECT_EQ(binomial(-1, 3), -1.0);
  EXPECT_EQ(binomial(-3, 2), 6.0);
  EXPECT_EQ(binomial(4, -1), 0.0);
  EXPECT_EQ(binomial(0, 0), 1.0);
}

TEST(Laguerre, Examples) {
  EXPECT_NEAR(laguerre(1, 0, 1.0), 0.0, 1e-15);
  EXPECT_EQ(laguerre(0, -2, 3.7), 1.0);
  EXPECT_NEAR(laguerre(2, -2, 1.0), 0.5, 1e-15);
}

TEST(Laguerre, FrozenValues) {
  EXPECT_NEAR(laguerre(5, -3, 2.5), -0.16276041666666666, 1e-14);
  EXPECT_NEAR(laguerre(4, 3, 1.7), 0.46117083333333371, 1e-13);
  EXPECT_NEAR(laguerre(7, -2, 3.2), 0.31677293714285732, 1e-12);
}

TEST(Laguerre, ThreeTermRecurrence) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nd(1, 19), ad(-10, 10);
  std::uniform_real_distribution<double> xd(-10.0, 10.0);
  for (int t = 0; t < 500; ++t) {
    const int n = nd(rng), a = ad(rng);
    const double x = xd(rng);
    const double lhs = (n + 1) * laguerre(n + 1, a, x);
    const double rhs = (2 * n + a + 1 - x) * laguerre(n, a, x) - (n + a) * laguerre(n - 1, a, x);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    EXPECT_NEAR(lhs, rhs, 1e-10 * scale) << "n=" << n << " a=" << a << " x=" << x;
  }
}

TEST(Laguerre, NegativeIndexReflection) {
  // L_n^{(-k)}(x) = (-x)^k (n-k)!/n! L_{n-k}^{(k)}(x) for k <= n
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      const double x = 0.3 + 0.7 * k;
      const double rhs = std::pow(-x, k) * factorial(n - k) / factorial(n) * laguerre(n - k, k, x);
      EXPECT_NEAR(laguerre(n, -k, x), rhs, 1e-11 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(Hyp2F1, Examples) {
  EXPECT_EQ(hyp2f1_terminating(-1, 1, 1, 1), 2.0);
  for (double K : {0.0, 0.5, 3.0, 10.0}) EXPECT_EQ(hyp2f1_terminating(K + 1, 0, 1, 2), 1.0);
  EXPECT_EQ(hyp2f1_terminating(1, 1, 1, 2), -1.0);
}

TEST(Hyp2F1, FrozenValues) {
  EXPECT_NEAR(hyp2f1_terminating(2.5, 4, 1.5, 0.7), -0.0423, 1e-14);
  EXPECT_NEAR(hyp2f1_terminating(3, 5, 1, 2), -61.0, 1e-12);
}

TEST(Hyp2F1, PoleThrows) {
  EXPECT_THROW(hyp2f1_terminating(1.0, 3, -1.0, 0.5), DomainError);
  EXPECT_NO_THROW(hyp2f1_terminating(1.0, 1, -1.0, 0.5));
}

TEST(Hyp2F1, RegularizedDropsPoleTerms) {
  // j=0 term vanishes (1/Gamma(0)); j=1: 3*(-2)*2/Gamma(1); j=2: 12*2*4/(Gamma(2)*2)
  EXPECT_NEAR(hyp2f1_terminating_regularized(3, 2, 0, 2), 36.0, 1e-12);
  EXPECT_NEAR(hyp2f1_terminating_regularized(2.5, 4, 1.5, 0.7),
              hyp2f1_terminating(2.5, 4, 1.5, 0.7) / std::tgamma(1.5), 1e-14);
}

TEST(Bessel, I0) {
  EXPECT_EQ(bessel_i0(0), 1.0);
  EXPECT_NEAR(bessel_i0(2), 2.27959, 5e-6);
  double partial = 0.0, term = 1.0;
  for (int k = 0; k <= 100; ++k) {
    if (k > 0) term /= static_cast<double>(k) * k;
    partial += term;
  }
  EXPECT_NEAR(bessel_i0(2), partial, 1e-14);
  EXPECT_NEAR(bessel_i0(2), 2.2795853023360673, 1e-15);
  EXPECT_NEAR(bessel_i0(3.5), 7.3782034322254797, 1e-14);
}

TEST(Bessel, I1) {
  EXPECT_EQ(bessel_i1(0), 0.0);
  EXPECT_NEAR(bessel_i1(2), 1.5906368546373291, 1e-15);
}

TEST(Poisson, Examples) {
  EXPECT_EQ(poisson_amplitude(0, 0.0), cplx(1.0));
  EXPECT_EQ(poisson_amplitude(3, 0.0), cplx(0.0));
  EXPECT_NEAR(std::abs(poisson_amplitude(1, 1.0) - std::exp(-0.5)), 0.0, 1e-16);
}

TEST(Poisson, Normalization) {
  const cplx alpha(1.3, 0.4);
  double s = 0.0;
  for (int n = 0; n <= 60; ++n) s += std::norm(poisson_amplitude(n, alpha));
  EXPECT_NEAR(s, 1.0, 1e-14);
}

TEST(Poisson, LargeIndexNoOverflow) {
  const cplx a = poisson_amplitude(400, 20.0);
  EXPECT_TRUE(std::isfinite(a.real()));
  EXPECT_GT(std::abs(a), 0.0);
}

}  // namespace
}  // namespace cvmp
