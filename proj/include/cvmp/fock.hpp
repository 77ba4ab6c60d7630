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

// Canonical single-mode operators on the truncated Fock space of cutoff N.
// Matrix elements are the exact infinite-space ones restricted to n <= N, so
// identities that move probability past |N> (e.g. [a, a^dagger] = 1) fail on
// the last level only.
namespace cvmp {

FockOperator build_annihilation(int cutoff);
FockOperator build_creation(int cutoff);
FockOperator build_number(int cutoff);

/// D(alpha) from the Laguerre closed form of <m|D(alpha)|n>. Unitary only as
/// the cutoff goes to infinity.
FockOperator build_displacement(cplx alpha, int cutoff);

/// x(theta) = a e^{-i theta} + a^dagger e^{i theta}
FockOperator build_quadrature(double theta, int cutoff);

/// |m><n|
FockOperator dyad(int m, int n, int cutoff);

std::vector<cplx> fock_ket(int n, int cutoff);

/// Truncated coherent ket (components n <= cutoff, not renormalized).
std::vector<cplx> coherent_ket(cplx alpha, int cutoff);

/// sum_{n <= cutoff} |<n|alpha>|^2
double coherent_truncated_norm(cplx alpha, int cutoff);

/// Smallest cutoff with truncated norm >= 1 - tol.
int coherent_required_cutoff(cplx alpha, double tol = 1e-8);

/// Two-mode Kronecker product A (x) B with joint index n1 * (N+1) + n2.
/// Throws ValidationError when the cutoffs differ.
Matrix tensor_product(const FockOperator& a, const FockOperator& b);

inline std::size_t joint_index(int n1, int n2, int cutoff) {
  return static_cast<std::size_t>(n1) * static_cast<std::size_t>(cutoff + 1) +
         static_cast<std::size_t>(n2);
}

}  // namespace cvmp
