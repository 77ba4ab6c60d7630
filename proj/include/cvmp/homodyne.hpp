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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cvmp/multipoles.hpp"
#include "cvmp/states.hpp"

namespace cvmp {

/// Quadrature moments <x(theta)^j>, j = 0..max_power, one row per phase.
struct QuadratureMomentSet {
  std::vector<double> phases;
  int max_power = 0;
  /// moments[k][j] = <x(phases[k])^j>
  std::vector<std::vector<double>> moments;
};

/// theta_k = pi k / count, k = 0..count-1.
std::vector<double> equispaced_phases(int count);

struct MomentNoise {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Exact Tr(rho x(theta)^j) by matrix powers. Requires support + J <= N
/// (TruncationError otherwise). With noise, every j >= 1 moment gets an
/// independent Gaussian offset of deviation sigma.
QuadratureMomentSet simulate_quadrature_moments(const DensityMatrix& rho,
                                                const std::vector<double>& phases, int max_power,
                                                std::optional<MomentNoise> noise = std::nullopt);

struct HomodyneRecovery {
  /// <T_Kq> for 2K <= m2 (direct-normal).
  MultipoleTable direct;
  /// <T^W_Kq> as fitted (direct-Weyl).
  MultipoleTable weyl;
  /// Root-mean-square fit residual per power j (index j).
  std::vector<double> residual_rms;
  /// Largest singular-value ratio sigma_max / sigma_min over the per-power designs.
  double condition = 1.0;
};

/// Per power j: fit x(theta)^j = sum_p C(j,p) e^{i theta (2p-j)} T^W_{j/2, p-j/2} by
/// least squares over the phases, then convert Weyl to normal order upward in K.
/// ConditioningError when a design has sigma_min / sigma_max below 1e-10.
HomodyneRecovery recover_inverse_multipoles(const QuadratureMomentSet& moments, int m2);

}  // namespace cvmp
