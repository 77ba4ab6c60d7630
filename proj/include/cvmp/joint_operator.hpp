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

#include <optional>
#include <vector>

#include "cvmp/matrix.hpp"
#include "cvmp/states.hpp"

namespace cvmp {

/// sum_{2K <= m2} sum_q T^inv_Kq (x) T^inv_{K,-q} on two modes of cutoff N.
/// Real symmetric; its expectation on rho (x) rho is the inverse cumulative sum.
struct JointOperator {
  int m2 = 0;
  int cutoff = 0;
  Matrix matrix;
};

/// Direct sparse accumulation of the stripe products. Requires N >= m2.
JointOperator build_joint_operator(int m2, int cutoff);
/// Reference build through dense Kronecker products.
JointOperator build_joint_operator_kron(int m2, int cutoff);

/// Tr(A (rho (x) rho))
double duplicated_expectation(const JointOperator& a, const DensityMatrix& rho);

enum class Exchange { Symmetric, Antisymmetric, Mixed };
const char* to_string(Exchange e);

/// Threshold on |<SWAP> -/+ 1| for a definite exchange class.
inline constexpr double kExchangeTol = 1e-6;

struct JointEigenpair {
  double value = 0.0;
  Exchange exchange = Exchange::Mixed;
  double swap_expectation = 0.0;
  std::vector<cplx> vector;
};

struct JointSpectrum {
  int m2 = 0;
  int cutoff = 0;
  /// Eigenpairs with the largest |lambda|, in descending |lambda|.
  std::vector<JointEigenpair> top;
  /// Most negative eigenvalue and |<(01-10)/sqrt2|v>|^2 for its eigenvector.
  double most_negative = 0.0;
  double antisymmetric_overlap = 0.0;
  bool most_negative_is_largest_magnitude = false;
  /// Eigenvalue whose eigenvector has the largest |<00|v>|^2.
  double vacuum_eigenvalue = 0.0;
  /// Largest eigenvalue of the exchange-symmetric sector.
  double symmetric_max = 0.0;
  double vacuum_ratio = 0.0;
  /// |<11|v>|^2 and c = -<11|v>/<02|v> for the symmetric-max eigenvector (N >= 2).
  std::optional<double> eleven_overlap;
  std::optional<double> c_constant;
};

/// Diagonalizes the exchange-symmetric and antisymmetric sectors separately
/// (the operator commutes with SWAP) and lifts the eigenvectors back.
JointSpectrum eigenanalysis(int m2, int cutoff, int top);

/// All eigenpairs of the full matrix by one dense solve (reference path).
std::vector<JointEigenpair> full_spectrum(const JointOperator& a);

/// <v|SWAP|v>
double swap_expectation(const std::vector<cplx>& v, int cutoff);

}  // namespace cvmp
