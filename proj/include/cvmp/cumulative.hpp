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

#include <string>
#include <utility>
#include <vector>

#include "cvmp/states.hpp"

namespace cvmp {

enum class CumulativeKind { Inverse, Direct };

/// Running sums of squared multipole norms, one entry per order 2K = m2.
struct CumulativeProfile {
  CumulativeKind kind = CumulativeKind::Inverse;
  std::vector<std::pair<int, double>> entries;

  double final_value() const { return entries.empty() ? 0.0 : entries.back().second; }
  bool nondecreasing() const;
};

/// sum_q |<T^inv_Kq>|^2 for 2K = k2.
double multipole_norm_sq(const DensityMatrix& rho, int k2);

/// sum_q |<T_Kq>|^2 for 2K = k2 (truncation rule of inverse_multipole applies).
double direct_norm_sq(const DensityMatrix& rho, int k2);

/// Profile of sum_{2K' <= 2K} of the inverse norms, for 2K = 0..m2.
CumulativeProfile cumulative_inverse(const DensityMatrix& rho, int m2);

/// Profile of the direct norms starting at K = 1/2 (the constant K = 0 term is
/// excluded, so the vacuum scores zero).
CumulativeProfile cumulative_direct(const DensityMatrix& rho, int m2);

/// sum_{K <= M, K integer} 1/K!^2, by term recurrence.
double vacuum_cumulative_closed(int m2);

/// Direct cumulative of a coherent state: sum_{k2=1}^{m2} (k2+1) nbar^{k2}.
double coherent_direct_closed(double nbar, int m2);

/// An analytic extremal state of the low-order case list.
struct ExtremalCase {
  int m2 = 0;
  /// "norm-max", "norm-min", "cumulative-max" or "cumulative-min"
  std::string role;
  std::string label;
  std::vector<cplx> ket;
  double value = 0.0;
};

/// Extremal states and values for 2M in {0, 1, 2, 3}; DomainError otherwise.
std::vector<ExtremalCase> extremal_closed_forms(int m2);

/// Recomputes the quantity named by `role` on the case's state.
double evaluate_extremal_case(const ExtremalCase& c);

struct MinimizerResult {
  DensityMatrix state;
  double energy = 0.0;
  double value = 0.0;
};

/// (ceil(nbar) - nbar)|ceil-1><ceil-1| + (1 + nbar - ceil)|ceil><ceil|, with
/// its direct cumulative value at order m2.
MinimizerResult direct_minimizer(double nbar, int m2);

}  // namespace cvmp
