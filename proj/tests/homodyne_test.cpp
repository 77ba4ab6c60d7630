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


#include "cvmp/homodyne.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "cvmp/closed_forms.hpp"
#include "cvmp/errors.hpp"

namespace cvmp {
namespace {

double recovery_error(const DensityMatrix& rho, int m2, int phases) {
  const auto set = simulate_quadrature_moments(rho, equispaced_phases(phases), m2);
  const auto rec = recover_inverse_multipoles(set, m2);
  double worst = 0.0;
  for (const auto& idx : indices_up_to(m2)) {
    worst = std::max(worst, std::abs(rec.direct.at(idx) - inverse_multipole(rho, idx)));
    worst = std::max(worst, std::abs(rec.weyl.at(idx) - weyl_inverse_multipole(rho, idx)));
  }
  return worst;
}

TEST(Moments, Examples) {
  const auto vac = make_state(FockSpec{0}, 6);
  const auto m = simulate_quadrature_moments(vac, equispaced_phases(5), 4);
  for (std::size_t k = 0; k < m.phases.size(); ++k) {
    EXPECT_NEAR(m.moments[k][0], 1.0, 1e-15);
    EXPECT_NEAR(m.moments[k][1], 0.0, 1e-15);
    EXPECT_NEAR(m.moments[k][2], 1.0, 1e-14);
    EXPECT_NEAR(m.moments[k][4], 3.0, 1e-13);
  }
  const auto coh = make_state(CoherentSpec{0.8}, 30).embedded(31);
  const auto c = simulate_quadrature_moments(coh, {0.0}, 1);
  EXPECT_NEAR(c.moments[0][1], 1.6, 1e-12);
}

TEST(Moments, TruncationRule) {
  EXPECT_THROW(simulate_quadrature_moments(make_state(FockSpec{3}, 4), equispaced_phases(4), 2), TruncationError);
}

TEST(Moments, Phases) {
  const auto p = equispaced_phases(4);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p[2], std::numbers::pi / 2);
}

TEST(Recovery, VacuumFirstOrder) {
  const auto set = simulate_quadrature_moments(make_state(FockSpec{0}, 4), equispaced_phases(8), 2);
  const auto rec = recover_inverse_multipoles(set, 2);
  for (int q2 : {-2, 0, 2}) EXPECT_NEAR(std::abs(rec.direct.at(TensorIndex(2, q2))), 0.0, 1e-12);
  EXPECT_NEAR(rec.direct.at(TensorIndex(0, 0)).real(), 1.0, 1e-12);
}

TEST(Recovery, CoherentHalfOrder) {
  const auto rho = make_state(CoherentSpec{1.0}, 30).embedded(34);
  const auto rec = recover_inverse_multipoles(simulate_quadrature_moments(rho, equispaced_phases(8), 4), 4);
  EXPECT_NEAR(std::abs(rec.direct.at(TensorIndex(1, 1)) - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(rec.direct.at(TensorIndex(1, -1)) - 1.0), 0.0, 1e-10);
}

TEST(Recovery, FockOne) {
  const auto rec =
      recover_inverse_multipoles(simulate_quadrature_moments(make_state(FockSpec{1}, 3), equispaced_phases(8), 2), 2);
  EXPECT_NEAR(rec.direct.at(TensorIndex(2, 0)).real(), 1.0, 1e-12);
}

TEST(Recovery, RoundTrips) {
  for (int n = 0; n <= 3; ++n) EXPECT_LT(recovery_error(make_state(FockSpec{n}, n + 6), 6, 8), 1e-8) << n;
  for (const cplx a : {cplx(0.5, 0.0), cplx(1.2, -0.7), cplx(0.0, 2.0)}) {
    const int base = required_cutoff(CoherentSpec{a});
    EXPECT_LT(recovery_error(make_state(CoherentSpec{a}, base).embedded(base + 6), 6, 8), 1e-8) << a;
  }
  const CatSpec cat{2, cplx(1.1, 0.4), {}};
  const int base = required_cutoff(cat);
  EXPECT_LT(recovery_error(make_state(cat, base).embedded(base + 6), 6, 8), 1e-8);
}

TEST(Recovery, RankDeficientDesign) {
  const auto set = simulate_quadrature_moments(make_state(FockSpec{0}, 6), equispaced_phases(2), 6);
  EXPECT_THROW(recover_inverse_multipoles(set, 6), ConditioningError);
}

TEST(Recovery, NoiseDeterministicAndReported) {
  const auto rho = make_state(FockSpec{1}, 8);
  const auto a = simulate_quadrature_moments(rho, equispaced_phases(8), 4, MomentNoise{1e-3, 42});
  const auto b = simulate_quadrature_moments(rho, equispaced_phases(8), 4, MomentNoise{1e-3, 42});
  EXPECT_EQ(a.moments, b.moments);
  for (const auto& row : a.moments) EXPECT_NEAR(row[0], 1.0, 1e-14);
  const auto rec = recover_inverse_multipoles(a, 4);
  double total = 0.0;
  for (double r : rec.residual_rms) total += r;
  EXPECT_GT(total, 0.0);
  EXPECT_GE(rec.condition, 1.0);
}

}  // namespace
}  // namespace cvmp
