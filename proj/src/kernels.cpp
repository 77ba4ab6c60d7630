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

#include "cvmp/kernels.hpp"

#include <omp.h>

#include <string>
#include <vector>

#include "cvmp/errors.hpp"

namespace cvmp::kernels {
namespace {

// Below this many rows the OpenMP fork costs more than it saves.
constexpr long kParallelMinRows = 48;

void check_dims(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw ValidationError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
}

// One output row of A*B, i-k-j order; zero entries of A are skipped since the
// basis matrices are single stripes.
inline void matmul_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
  const std::size_t n = a.dim();
  auto orow = out.row(i);
  const auto arow = a.row(i);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx aik = arow[k];
    if (aik == cplx{}) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
  }
}

inline cplx trace_row(const Matrix& a, const Matrix& b, std::size_t i) {
  const std::size_t n = a.dim();
  const auto arow = a.row(i);
  cplx s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (arow[k] == cplx{}) continue;
    s += arow[k] * b(k, i);
  }
  return s;
}

inline void kron_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t r1) {
  const std::size_t nb = b.dim();
  for (std::size_t c1 = 0; c1 < a.dim(); ++c1) {
    const cplx v = a(r1, c1);
    if (v == cplx{}) continue;
    for (std::size_t r2 = 0; r2 < nb; ++r2)
      for (std::size_t c2 = 0; c2 < nb; ++c2) out(r1 * nb + r2, c1 * nb + c2) = v * b(r2, c2);
  }
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_dims(a, b, "matmul");
  Matrix out(a.dim());
  const long n = static_cast<long>(a.dim());
#pragma omp parallel for schedule(static) if (n >= kParallelMinRows)
  for (long i = 0; i < n; ++i) matmul_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  check_dims(a, b, "matmul");
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) matmul_row(a, b, out, i);
  return out;
}

cplx trace_product(const Matrix& a, const Matrix& b) {
  check_dims(a, b, "trace_product");
  const long n = static_cast<long>(a.dim());
  std::vector<cplx> partial(a.dim());
#pragma omp parallel for schedule(static) if (n >= kParallelMinRows)
  for (long i = 0; i < n; ++i) partial[i] = trace_row(a, b, static_cast<std::size_t>(i));
  cplx s = 0.0;
  for (const auto& p : partial) s += p;
  return s;
}

cplx trace_product_serial(const Matrix& a, const Matrix& b) {
  check_dims(a, b, "trace_product");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += trace_row(a, b, i);
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  const long n = static_cast<long>(a.dim());
#pragma omp parallel for schedule(static) if (n * static_cast<long>(b.dim()) >= kParallelMinRows)
  for (long r1 = 0; r1 < n; ++r1) kron_row(a, b, out, static_cast<std::size_t>(r1));
  return out;
}

Matrix kron_serial(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  for (std::size_t r1 = 0; r1 < a.dim(); ++r1) kron_row(a, b, out, r1);
  return out;
}

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) {
  if (n > 0) {
    omp_set_num_threads(n);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
}

}  // namespace cvmp::kernels
