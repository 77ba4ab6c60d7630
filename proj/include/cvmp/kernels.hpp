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

// Data-parallel dense kernels. Every OpenMP kernel has a `_serial` twin that
// is kept as the reference implementation; tests require the two to agree
// bit-for-bit (each output element is accumulated in the same order).
namespace cvmp::kernels {

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_serial(const Matrix& a, const Matrix& b);

/// Tr(A B) without forming the product.
cplx trace_product(const Matrix& a, const Matrix& b);
cplx trace_product_serial(const Matrix& a, const Matrix& b);

/// Kronecker product, joint index r1 * dim(b) + r2.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_serial(const Matrix& a, const Matrix& b);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();
/// Caps the OpenMP team size; n <= 0 restores the runtime default.
void set_thread_count(int n);

}  // namespace cvmp::kernels
