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


#include "cvmp/cumulative.hpp"

#include <gtest/gtest.h>

#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "cvmp/multipoles.hpp"
#include "cvmp/special_functions.hpp"
#include "test_util.hpp"

namespace cvmp {
namespace {

DensityMatrix psi_plus() { return DensityMatrix::from_pure(std::vector<cplx>{1.0, 1.0}); }

TEST(NormSq, Examples) {
  EXPECT_EQ(multipole_norm_sq(make_state(FockSpec{0}, 2), 0), 1.0);
  EXPECT_NEAR(multipole_norm_sq(psi_plus(), 1), 0.5, 1e-15);
  EXPECT_NEAR(multipole_norm_sq(psi_plus(), 2), 0.0, 1e-15);
}

TEST(CumulativeInverse, VacuumPartialSums) {
  const auto vac = make_state(FockSpec{0}, 0);
  EXPECT_NEAR(cumulative_inverse(vac, 2).final_value(), 2.0, 1e-15);
  const auto p = cumulative_inverse(vac, 200);
  for (const auto& [m2, v] : p.entries) EXPECT_NEAR(v, vacuum_cumulative_closed(m2), 1e-15) << m2;
  EXPECT_NEAR(p.final_value(), bessel_i0(2.0), 1e-12);
  EXPECT_TRUE(p.nondecreasing());
  EXPECT_LE(p.final_value(), bessel_i0(2.0) + 1e-15);
}

TEST(CumulativeInverse, VacuumBeatsFockOne) {
  for (int M = 1; M <= 10; ++M) {
    const double d = cumulative_inverse(make_state(FockSpec{0}, 1), 2 * M).final_value() -
                     cumulative_inverse(make_state(FockSpec{1}, 1), 2 * M).final_value();
    EXPECT_NEAR(d, 1.0 / (factorial(M) * factorial(M)), 1e-12) << M;
  }
  const double d3 = cumulative_inverse(make_state(FockSpec{0}, 1), 6).final_value() -
                    cumulative_inverse(make_state(FockSpec{1}, 1), 6).final_value();
  EXPECT_NEAR(d3, 1.0 / 36.0, 1e-15);
}

TEST(CumulativeInverse, FockScaling) {
  const double vac = cumulative_inverse(make_state(FockSpec{0}, 3), 80).final_value();
  for (int n = 1; n <= 3; ++n) {
    const double v = cumulative_inverse(make_state(FockSpec{n}, 3), 80).final_value();
    EXPECT_NEAR(v * factorial(n) * factorial(n), vac, 1e-10) << n;
  }
}

TEST(CumulativeInverse, RandomProfilesMonotone) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(cumulative_inverse(testing::random_density(rng, 4, 6), 12).nondecreasing());
}

TEST(CumulativeDirect, Examples) {
  const auto vac = make_state(FockSpec{0}, 8);
  for (const auto& [m2, v] : cumulative_direct(vac, 8).entries) EXPECT_EQ(v, 0.0);
  EXPECT_NEAR(cumulative_direct(make_state(FockSpec{1}, 3), 2).final_value(), 1.0, 1e-15);
  for (double nbar : {0.3, 1.0, 2.5}) {
    const cplx alpha = std::polar(std::sqrt(nbar), 1.1);
    const int base = required_cutoff(CoherentSpec{alpha});
    const auto rho = make_state(CoherentSpec{alpha}, base).embedded(base + 8);
    const auto p = cumulative_direct(rho, 8);
    for (const auto& [m2, v] : p.entries)
      EXPECT_NEAR(v, coherent_direct_closed(nbar, m2), 1e-6 * std::max(1.0, v)) << nbar << " " << m2;
    EXPECT_TRUE(p.nondecreasing());
  }
}

TEST(CumulativeDirect, TruncationRule) {
  EXPECT_THROW(cumulative_direct(make_state(FockSpec{2}, 3), 4), TruncationError);
}

TEST(Extremal, ClosedFormsEvaluate) {
  for (int m2 = 0; m2 <= 3; ++m2)
    for (const auto& c : extremal_closed_forms(m2))
      EXPECT_NEAR(evaluate_extremal_case(c), c.value, 1e-14) << m2 << " " << c.role << " " << c.label;
  EXPECT_THROW(extremal_closed_forms(4), DomainError);
}

TEST(Extremal, ThreeHalvesMaximizerBeatsVacuum) {
  const auto cases = extremal_closed_forms(3);
  EXPECT_EQ(multipole_norm_sq(make_state(FockSpec{0}, 2), 3), 0.0);
  EXPECT_GT(evaluate_extremal_case(cases.front()), 0.0);
}

TEST(Extremal, RandomStatesRespectBounds) {
  std::mt19937_64 rng(77);
  for (int m2 = 0; m2 <= 3; ++m2) {
    double norm_max = 0.0, norm_min = INFINITY, cum_max = 0.0;
    for (const auto& c : extremal_closed_forms(m2)) {
      if (c.role == "norm-max") norm_max = std::max(norm_max, c.value);
      if (c.role == "norm-min") norm_min = std::min(norm_min, c.value);
      if (c.role == "cumulative-max") cum_max = c.value;
    }
    for (int t = 0; t < 2000; ++t) {
      const auto rho = testing::random_pure(rng, 4, 4);
      const double n = multipole_norm_sq(rho, m2);
      EXPECT_LE(n, norm_max + 1e-12);
      EXPECT_GE(n, norm_min - 1e-12);
      EXPECT_LE(cumulative_inverse(rho, m2).final_value(), cum_max + 1e-12);
    }
  }
}

TEST(Extremal, SquaredMultipolesConvex) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = testing::random_density(rng, 3, 3);
    const auto b = testing::random_pure(rng, 3, 3);
    for (const auto& idx : indices_up_to(6)) {
      auto f = [&](double lam) {
        return std::norm(lam * state_multipole(a, idx) + (1.0 - lam) * state_multipole(b, idx));
      };
      for (double lam = 0.1; lam < 0.95; lam += 0.1) {
        const double h = 0.05;
        EXPECT_GE(f(lam + h) - 2.0 * f(lam) + f(lam - h), -1e-12);
      }
      const double w[] = {0.3, 0.7};
      const DensityMatrix parts[] = {a, b};
      const auto mix = DensityMatrix::mixture(w, parts);
      EXPECT_NEAR(std::norm(state_multipole(mix, idx)), f(0.3), 1e-12);
    }
  }
}

TEST(Minimizer, Examples) {
  const auto two = direct_minimizer(2.0, 4);
  EXPECT_LT(max_abs_diff(two.state.op(), dyad(2, 2, 6)), 1e-15);
  const auto half = direct_minimizer(1.5, 4);
  EXPECT_NEAR(half.state(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(half.state(2, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(half.energy, 1.5, 1e-12);
  const auto zero = direct_minimizer(0.0, 6);
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_EQ(zero.state(0, 0), cplx(1.0));
  EXPECT_THROW(direct_minimizer(-1.0, 4), DomainError);
}

TEST(Minimizer, EnergyExact) {
  for (double nbar = 0.0; nbar < 5.0; nbar += 0.37) EXPECT_NEAR(direct_minimizer(nbar, 4).energy, nbar, 1e-12);
}

}  // namespace
}  // namespace cvmp
