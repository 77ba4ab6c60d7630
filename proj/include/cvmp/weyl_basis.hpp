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

#include <vector>

#include "cvmp/matrix.hpp"
#include "cvmp/tensor_index.hpp"

// Symmetrically (Weyl) ordered monomials T^W_Kq and their inverse operators.
// The inverse operators have infinite Fock support; matrices are filled up to
// the cutoff.
namespace cvmp {

/// One term c * T_{k2, q} of the normal-order expansion of T^W_{Kq}.
struct WeylTerm {
  int k2 = 0;
  double coefficient = 0.0;
};

/// T^W_Kq = sum_n (K+q)!(K-q)! / (2^n n! (K+q-n)! (K-q-n)!) T_{K-n, q}.
/// The leading term (n = 0) has coefficient 1.
std::vector<WeylTerm> weyl_to_normal(const TensorIndex& idx);

/// <n+2q| T^W_Kq |n>
double monomial_weyl_element(const TensorIndex& idx, int n);

/// Weyl monomial matrix; TruncationError when N < K+|q|.
FockOperator monomial_weyl_matrix(const TensorIndex& idx, int cutoff);

/// Stripe coefficient of the Weyl inverse operator between levels n-|2q| and n
/// (n >= |2q|), from the regularized 2F1 closed form
///   (-1)^{K+3|q|} / (K-|q|)! sqrt(n!/(n-2|q|)!) 2^{K+|q|+1} 2F1~(K+|q|+1, 2|q|-n; 2|q|+1; 2).
double inverse_weyl_coefficient(const TensorIndex& idx, int n);

/// Weyl inverse operator on the full (N+1)^2 grid.
FockOperator inverse_weyl_matrix(const TensorIndex& idx, int cutoff);

/// Same operator assembled as sum_{K'} X_{K K'} T^inv_{K' q}, where X is
/// obtained by solving the triangular system transposed to weyl_to_normal in
/// extended precision, truncated at 2K' <= k2_series.
FockOperator inverse_weyl_matrix_from_series(const TensorIndex& idx, int cutoff, int k2_series);

/// Tr(T^W,inv_{inv} T^W_{mono}) over levels n <= N. The diagonal terms do not
/// decay (T^W,inv_00 = 2 parity), so the partial sums are Euler-summed by
/// iterated averaging.
double weyl_pairing(const TensorIndex& inv, const TensorIndex& mono, int cutoff);

}  // namespace cvmp
