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

#include "cvmp/matrix.hpp"
#include "cvmp/tensor_index.hpp"

// Normally ordered monomials T_Kq = a^dagger^{K+q} a^{K-q} and their
// trace-dual inverse operators, as Fock-basis matrices.
namespace cvmp {

/// <n+2q| T_Kq |n> = sqrt(n! (n+2q)!) / (n-K+q)!  for n >= K-q; zero otherwise.
double monomial_element(const TensorIndex& idx, int n);

/// Stripe coefficient of the inverse operator between levels n-|2q| and n:
/// the entry <n-2q|T^inv|n> for q >= 0 (and its transpose position for q < 0),
/// (-1)^{K+|q|+n} / (sqrt(n! (n-2|q|)!) (K+|q|-n)!) for 2|q| <= n <= K+|q|.
double inverse_coefficient(const TensorIndex& idx, int n);

/// Monomial matrix on cutoff N; TruncationError when N < K+|q|.
FockOperator monomial_matrix(const TensorIndex& idx, int cutoff);

/// Inverse operator matrix on cutoff N; TruncationError when N < K+|q|.
FockOperator inverse_matrix(const TensorIndex& idx, int cutoff);

/// Nonzero pattern of the inverse operator: entries (r, c) with c - r = 2q and
/// r + c in {min_sum, min_sum+2, ..., max_sum} = {|2q|, ..., 2K}.
struct StripePattern {
  int offset = 0;
  int min_sum = 0;
  int max_sum = 0;
  bool contains(int row, int col) const;
};

StripePattern support_pattern(const TensorIndex& idx);

struct OrthonormalityReport {
  double max_deviation = 0.0;
  TensorIndex worst_inverse{0, 0};
  TensorIndex worst_monomial{0, 0};
  long pairs_checked = 0;
};

/// max |Tr(T^inv_{Kq} T_{K'q'}) - delta| over every index pair with
/// 2K, 2K' <= k2max. Requires N >= 2 k2max so every trace is an exact finite
/// sum; TruncationError otherwise.
OrthonormalityReport verify_orthonormality(int k2max, int cutoff);
OrthonormalityReport verify_orthonormality_serial(int k2max, int cutoff);

/// Tr(T^inv_{Kq} T^inv_{K'q'}) in closed form (terminating 2F1 at z = 1).
double inverse_trace_overlap(const TensorIndex& a, const TensorIndex& b);

}  // namespace cvmp
