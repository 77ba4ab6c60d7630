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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/special_functions.hpp"
#include "cvmp/weyl_basis.hpp"

namespace cvmp {
namespace {

constexpr double kMinSingularRatio = 1e-10;

}  // namespace

std::vector<double> equispaced_phases(int count) {
  if (count < 1) throw DomainError("phase count must be positive");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[k] = std::numbers::pi * k / count;
  return out;
}

QuadratureMomentSet simulate_quadrature_moments(const DensityMatrix& rho,
                                                const std::vector<double>& phases, int max_power,
                                                std::optional<MomentNoise> noise) {
  if (max_power < 0) throw DomainError("max power must be nonnegative");
  const int need = rho.support_bound() + max_power;
  if (need > rho.cutoff())
    throw TruncationError("quadrature moments up to j=" + std::to_string(max_power) +
                              " need cutoff >= " + std::to_string(need),
                          need);
  QuadratureMomentSet out{phases, max_power, {}};
  std::mt19937_64 rng(noise ? noise->seed : 0);
  std::normal_distribution<double> gauss(0.0, noise ? noise->sigma : 0.0);
  for (const double theta : phases) {
    const auto x = build_quadrature(theta, rho.cutoff());
    std::vector<double> row(static_cast<std::size_t>(max_power) + 1);
    FockOperator power = rho.op();  // rho x^j
    row[0] = power.trace().real();
    for (int j = 1; j <= max_power; ++j) {
      power = kernels::matmul(power, x);
      row[j] = power.trace().real();
      if (noise && noise->sigma > 0.0) row[j] += gauss(rng);
    }
    out.moments.push_back(std::move(row));
  }
  return out;
}

HomodyneRecovery recover_inverse_multipoles(const QuadratureMomentSet& set, int m2) {
  if (m2 < 0) throw DomainError("m2 must be nonnegative");
  if (m2 > set.max_power)
    throw ValidationError("moment set holds powers up to " + std::to_string(set.max_power) +
                          ", need " + std::to_string(m2));
  const int P = static_cast<int>(set.phases.size());
  HomodyneRecovery out;
  out.direct = {Basis::DirectNormal, m2, {}};
  out.weyl = {Basis::DirectWeyl, m2, {}};
  out.residual_rms.assign(static_cast<std::size_t>(m2) + 1, 0.0);
  out.weyl.entries.emplace(TensorIndex(0, 0), 1.0);
  out.direct.entries.emplace(TensorIndex(0, 0), 1.0);

  for (int j = 1; j <= m2; ++j) {
    // Unknowns: (Re, Im) of w_q2 for q2 = j, j-2, ... > 0 and a real w_0 if j is even.
    std::vector<int> pos_q2;
    for (int q2 = j; q2 > 0; q2 -= 2) pos_q2.push_back(q2);
    const bool has_zero = (j % 2 == 0);
    const int cols = 2 * static_cast<int>(pos_q2.size()) + (has_zero ? 1 : 0);
    if (P < cols)
      throw ConditioningError("power j=" + std::to_string(j) + " needs at least " +
                                  std::to_string(cols) + " phases, got " + std::to_string(P),
                              INFINITY);
    Eigen::MatrixXd A(P, cols);
    Eigen::VectorXd b(P);
    for (int k = 0; k < P; ++k) {
      const double th = set.phases[k];
      int c = 0;
      for (const int q2 : pos_q2) {
        const double w = 2.0 * binomial(j, (j + q2) / 2);
        A(k, c++) = w * std::cos(q2 * th);
        A(k, c++) = -w * std::sin(q2 * th);
      }
      if (has_zero) A(k, c) = binomial(j, j / 2);
      b(k) = set.moments[k][j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double ratio = sv(sv.size() - 1) / sv(0);
    if (!(ratio >= kMinSingularRatio))
      throw ConditioningError("phase design for power j=" + std::to_string(j) +
                                  " is rank deficient (singular ratio " + std::to_string(ratio) +
                                  ")",
                              1.0 / ratio);
    out.condition = std::max(out.condition, 1.0 / ratio);
    const Eigen::VectorXd x = svd.solve(b);
    out.residual_rms[j] = std::sqrt((A * x - b).squaredNorm() / P);
    int c = 0;
    for (const int q2 : pos_q2) {
      const cplx w(x(c), x(c + 1));
      c += 2;
      out.weyl.entries[TensorIndex(j, q2)] = w;
      out.weyl.entries[TensorIndex(j, -q2)] = std::conj(w);
    }
    if (has_zero) out.weyl.entries[TensorIndex(j, 0)] = x(c);
  }

  // <T_Kq> = <T^W_Kq> - sum_{n>=1} c_n <T_{K-n,q}>, lower orders first.
  for (int k2 = 1; k2 <= m2; ++k2) {
    for (const auto& idx : indices_at(k2)) {
      cplx v = out.weyl.at(idx);
      for (const auto& t : weyl_to_normal(idx)) {
        if (t.k2 == k2) continue;
        v -= t.coefficient * out.direct.at(TensorIndex(t.k2, idx.q2()));
      }
      out.direct.entries[idx] = v;
    }
  }
  return out;
}

}  // namespace cvmp
