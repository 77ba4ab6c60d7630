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

#include "cvmp/qutrit.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "cvmp/cumulative.hpp"
#include "cvmp/errors.hpp"
#include "cvmp/states.hpp"

namespace cvmp {
namespace {

std::array<double, 7> monomials(double p0, double p1, double p2) {
  return {p0 * p0, p1 * p1, p2 * p2, p0 * p1, p0 * p2, p1 * p2, p1 * std::sqrt(p0 * p2)};
}

QutritScan scan_impl(int m2, int grid, bool parallel) {
  if (grid < 2) throw DomainError("qutrit scan grid must be >= 2");
  const int g = grid - 1;
  std::vector<std::vector<QutritPoint>> rows(static_cast<std::size_t>(grid));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i <= g; ++i) {
    for (int j = 0; i + j <= g; ++j) {
      const double p0 = static_cast<double>(i) / g;
      const double p1 = static_cast<double>(j) / g;
      const double p2 = static_cast<double>(g - i - j) / g;
      rows[i].push_back({p0, p1, qutrit_value(p0, p1, p2, m2)});
    }
  }
  QutritScan s{m2, grid, {}, {}};
  bool first = true;
  for (const auto& row : rows) {
    for (const auto& p : row) {
      s.points.push_back(p);
      if (first || p.value > s.best.value) s.best = p;
      first = false;
    }
  }
  return s;
}

}  // namespace

double qutrit_value(double p0, double p1, double p2, int m2) {
  if (p0 < 0.0 || p1 < 0.0 || p2 < 0.0) throw DomainError("qutrit probabilities must be >= 0");
  const std::vector<cplx> psi = {std::sqrt(p0), std::sqrt(p1), -std::sqrt(p2)};
  return cumulative_inverse(DensityMatrix::from_pure(psi), m2).final_value();
}

double QutritForm::evaluate(double p0, double p1, double p2) const {
  const auto m = monomials(p0, p1, p2);
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += coefficients[i] * m[i];
  return s;
}

std::array<std::array<double, 3>, 7> qutrit_probes() {
  return {{{1.0, 0.0, 0.0},
           {0.0, 1.0, 0.0},
           {0.0, 0.0, 1.0},
           {0.5, 0.5, 0.0},
           {0.5, 0.0, 0.5},
           {0.0, 0.5, 0.5},
           {0.25, 0.5, 0.25}}};
}

QutritForm qutrit_form(int m2) {
  if (m2 < 4) throw DomainError("qutrit_form requires m2 >= 4");
  const auto probes = qutrit_probes();
  Eigen::Matrix<double, 7, 7> A;
  Eigen::Matrix<double, 7, 1> b;
  for (int r = 0; r < 7; ++r) {
    const auto& p = probes[r];
    const auto m = monomials(p[0], p[1], p[2]);
    for (int c = 0; c < 7; ++c) A(r, c) = m[c];
    b(r) = qutrit_value(p[0], p[1], p[2], m2);
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 7, 7>> svd(A);
  const auto& sv = svd.singularValues();
  QutritForm f;
  f.m2 = m2;
  f.condition = sv(0) / sv(6);
  if (!(sv(6) > 1e-12 * sv(0))) throw ConditioningError("qutrit probe design is singular", f.condition);
  const Eigen::Matrix<double, 7, 1> x = A.fullPivLu().solve(b);
  for (int i = 0; i < 7; ++i) f.coefficients[i] = x(i);
  return f;
}

QutritScan scan_qutrit(int m2, int grid) { return scan_impl(m2, grid, true); }
QutritScan scan_qutrit_serial(int m2, int grid) { return scan_impl(m2, grid, false); }

}  // namespace cvmp
