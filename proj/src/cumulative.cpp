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

#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "cvmp/multipoles.hpp"

namespace cvmp {

bool CumulativeProfile::nondecreasing() const {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].second < entries[i - 1].second) return false;
  return true;
}

double multipole_norm_sq(const DensityMatrix& rho, int k2) {
  double s = 0.0;
  for (const auto& idx : indices_at(k2)) s += std::norm(state_multipole(rho, idx));
  return s;
}

double direct_norm_sq(const DensityMatrix& rho, int k2) {
  double s = 0.0;
  for (const auto& idx : indices_at(k2)) s += std::norm(inverse_multipole(rho, idx));
  return s;
}

CumulativeProfile cumulative_inverse(const DensityMatrix& rho, int m2) {
  if (m2 < 0) throw DomainError("m2 must be nonnegative");
  CumulativeProfile p{CumulativeKind::Inverse, {}};
  double acc = 0.0;
  for (int k2 = 0; k2 <= m2; ++k2) {
    acc += multipole_norm_sq(rho, k2);
    p.entries.emplace_back(k2, acc);
  }
  return p;
}

CumulativeProfile cumulative_direct(const DensityMatrix& rho, int m2) {
  if (m2 < 0) throw DomainError("m2 must be nonnegative");
  CumulativeProfile p{CumulativeKind::Direct, {}};
  double acc = 0.0;
  p.entries.emplace_back(0, 0.0);
  for (int k2 = 1; k2 <= m2; ++k2) {
    acc += direct_norm_sq(rho, k2);
    p.entries.emplace_back(k2, acc);
  }
  return p;
}

double vacuum_cumulative_closed(int m2) {
  double term = 1.0;
  double acc = 1.0;
  for (int K = 1; 2 * K <= m2; ++K) {
    term /= static_cast<double>(K) * K;
    acc += term;
  }
  return acc;
}

double coherent_direct_closed(double nbar, int m2) {
  double acc = 0.0;
  double power = 1.0;
  for (int k2 = 1; k2 <= m2; ++k2) {
    power *= nbar;
    acc += (k2 + 1) * power;
  }
  return acc;
}

std::vector<ExtremalCase> extremal_closed_forms(int m2) {
  const double r2 = std::sqrt(0.5);
  std::vector<ExtremalCase> out;
  auto add = [&](std::string role, std::string label, std::vector<cplx> ket, double value) {
    out.push_back({m2, std::move(role), std::move(label), std::move(ket), value});
  };
  switch (m2) {
    case 0:
      add("norm-max", "vacuum", {1.0}, 1.0);
      add("norm-min", "fock:1", {0.0, 1.0}, 0.0);
      add("cumulative-max", "vacuum", {1.0}, 1.0);
      add("cumulative-min", "fock:1", {0.0, 1.0}, 0.0);
      break;
    case 1:
      add("norm-max", "psi+", {r2, r2}, 0.5);
      add("norm-min", "fock:1", {0.0, 1.0}, 0.0);
      add("cumulative-max", "vacuum", {1.0}, 1.0);
      add("cumulative-min", "fock:1", {0.0, 1.0}, 0.0);
      break;
    case 2:
      add("norm-max", "vacuum", {1.0}, 1.0);
      add("norm-max", "fock:1", {0.0, 1.0}, 1.0);
      add("norm-min", "psi+", {r2, r2}, 0.0);
      add("norm-min", "fock:2", {0.0, 0.0, 1.0}, 0.0);
      add("cumulative-max", "vacuum", {1.0}, 2.0);
      add("cumulative-min", "fock:2", {0.0, 0.0, 1.0}, 0.0);
      break;
    case 3:
      add("norm-max", "sqrt(1/3)|0> + sqrt(1/2)|1> - sqrt(1/6)|2>",
          {std::sqrt(1.0 / 3.0), r2, -std::sqrt(1.0 / 6.0)}, 0.75);
      add("norm-min", "fock:1", {0.0, 1.0}, 0.0);
      add("cumulative-max", "vacuum", {1.0}, 2.0);
      add("cumulative-min", "fock:3", {0.0, 0.0, 0.0, 1.0}, 0.0);
      break;
    default:
      throw DomainError("extremal closed forms exist for m2 in {0,1,2,3}, got " +
                        std::to_string(m2));
  }
  return out;
}

double evaluate_extremal_case(const ExtremalCase& c) {
  const auto rho = DensityMatrix::from_pure(c.ket);
  if (c.role.rfind("norm", 0) == 0) return multipole_norm_sq(rho, c.m2);
  return cumulative_inverse(rho, c.m2).final_value();
}

MinimizerResult direct_minimizer(double nbar, int m2) {
  if (!(nbar >= 0.0)) throw DomainError("nbar must be nonnegative");
  const int top = static_cast<int>(std::ceil(nbar));
  const int cutoff = top + m2;
  std::vector<DensityMatrix> parts;
  std::vector<double> weights;
  if (nbar == static_cast<double>(top)) {
    parts.push_back(DensityMatrix::from_pure(fock_ket(top, cutoff)));
    weights.push_back(1.0);
  } else {
    parts.push_back(DensityMatrix::from_pure(fock_ket(top - 1, cutoff)));
    parts.push_back(DensityMatrix::from_pure(fock_ket(top, cutoff)));
    weights.push_back(top - nbar);
    weights.push_back(1.0 + nbar - top);
  }
  auto rho = DensityMatrix::mixture(weights, parts);
  const double energy = rho.expectation(build_number(cutoff)).real();
  const double value = cumulative_direct(rho, m2).final_value();
  return {std::move(rho), energy, value};
}

}  // namespace cvmp
