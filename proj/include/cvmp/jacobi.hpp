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

namespace cvmp {

/// Eigenpairs of a Hermitian matrix, values sorted in descending order.
/// Column i of `vectors` is the eigenvector of values[i].
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
  std::size_t dim = 0;
  int sweeps = 0;

  std::vector<cplx> vector(std::size_t i) const;
};

struct JacobiOptions {
  /// Admissible max |A_rc - conj(A_cr)|, relative to max(1, max|A|).
  double hermitian_tol = 1e-10;
  /// Stop when the off-diagonal Frobenius norm falls below tol * ||A||_F.
  double convergence_tol = 1e-15;
  int max_sweeps = 60;
};

/// Complex Jacobi with round-robin (tournament) pair ordering: every round
/// applies n/2 disjoint rotations, parallelized over rows and over pairs.
EigenDecomposition hermitian_eigensolve(const Matrix& a, const JacobiOptions& opts = {});

/// Cyclic-by-row Jacobi, one rotation at a time. Reference implementation.
EigenDecomposition hermitian_eigensolve_serial(const Matrix& a, const JacobiOptions& opts = {});

}  // namespace cvmp
