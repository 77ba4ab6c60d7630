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

// Closed-form multipoles of coherent, Fock and rank-one dyad operators. These
// are oracles for the stripe-sum engine.
namespace cvmp {

/// <alpha|T^inv_Kq|alpha> = (-1)^{K+q}/(K-q)! e^{-|alpha|^2} alpha*^{-2q} L_{K+q}^{(-2q)}(|alpha|^2).
/// At alpha = 0 with q != 0 the stripe sum on the vacuum is returned.
cplx coherent_multipole_closed(cplx alpha, const TensorIndex& idx);

/// <alpha|T^W,inv_Kq|alpha> = 2^{K-q+1}(-1)^{K+q}/(K-q)! e^{-2|alpha|^2} alpha*^{-2q} L_{K+q}^{(-2q)}(2|alpha|^2).
cplx coherent_weyl_multipole_closed(cplx alpha, const TensorIndex& idx);

/// <alpha|T_Kq|alpha> = alpha*^{K+q} alpha^{K-q}
cplx coherent_inverse_multipole_closed(cplx alpha, const TensorIndex& idx);

/// <n|T^inv_Kq|n> = delta_q0 (-1)^{K+n} / (n! (K-n)!)
double fock_multipole_closed(int n, const TensorIndex& idx);

/// <n|T^W,inv_Kq|n> = delta_q0 (-1)^K 2^{K+1} 2F1(K+1, -n; 1; 2) / K!
double fock_weyl_multipole_closed(int n, const TensorIndex& idx);

/// <n|T_Kq|n> = delta_q0 K! C(n, K)
double fock_inverse_multipole_closed(int n, const TensorIndex& idx);

/// Coefficient of rho_nm in <T^inv_Kq>, i.e. <m|T^inv_Kq|n>: nonzero when n - m = 2q and
/// equal to (-1)^{K+q+n} sqrt(n!/(n-2q)!) C(K+q, n) / (K+q)! for q >= 0.
double dyad_multipole_closed(int m, int n, const TensorIndex& idx);

/// Coefficient of rho_nm in <T^W,inv_Kq>, from the regularized 2F1 form.
double dyad_weyl_multipole_closed(int m, int n, const TensorIndex& idx);

}  // namespace cvmp
