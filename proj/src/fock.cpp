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

#include "cvmp/fock.hpp"

#include <cmath>
#include <string>

#include "cvmp/errors.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/special_functions.hpp"
#include "factorial_table.hpp"

namespace cvmp {
namespace {

std::size_t dim_of(int cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative, got " + std::to_string(cutoff));
  return static_cast<std::size_t>(cutoff) + 1;
}

// L_n^{(a)}(x) for a >= 0 by the three-term recurrence; the alternating finite
// sum loses too many digits once n and x are both large.
long double laguerre_upward(int n, int a, long double x) {
  long double prev = 1.0L;
  if (n == 0) return prev;
  long double cur = 1.0L + a - x;
  for (int k = 1; k < n; ++k) {
    const long double next = ((2.0L * k + a + 1.0L - x) * cur - (k + a) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

FockOperator build_annihilation(int cutoff) {
  FockOperator a(dim_of(cutoff));
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockOperator build_creation(int cutoff) {
  FockOperator a(dim_of(cutoff));
  for (int n = 1; n <= cutoff; ++n) a(n, n - 1) = std::sqrt(static_cast<double>(n));
  return a;
}

FockOperator build_number(int cutoff) {
  FockOperator a(dim_of(cutoff));
  for (int n = 0; n <= cutoff; ++n) a(n, n) = n;
  return a;
}

FockOperator build_displacement(cplx alpha, int cutoff) {
  FockOperator d(dim_of(cutoff));
  const double x = std::norm(alpha);
  const double damp = std::exp(-0.5 * x);
  for (int m = 0; m <= cutoff; ++m) {
    for (int n = 0; n <= cutoff; ++n) {
      // m >= n: sqrt(n!/m!) alpha^{m-n} L_n^{(m-n)};  m < n: sqrt(m!/n!) (-alpha*)^{n-m} L_m^{(n-m)}
      const int lo = std::min(m, n);
      const int k = std::abs(m - n);
      const cplx base = (m >= n) ? alpha : -std::conj(alpha);
      const long double ratio = 1.0L / std::sqrt(detail::falling_ratio_ld(lo + k, lo));
      const long double lag = laguerre_upward(lo, k, x);
      d(m, n) = static_cast<double>(ratio * lag) * damp * std::pow(base, k);
    }
  }
  return d;
}

FockOperator build_quadrature(double theta, int cutoff) {
  FockOperator x(dim_of(cutoff));
  const cplx lower = std::polar(1.0, -theta);
  const cplx raise = std::polar(1.0, theta);
  for (int n = 1; n <= cutoff; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    x(n - 1, n) = s * lower;
    x(n, n - 1) = s * raise;
  }
  return x;
}

FockOperator dyad(int m, int n, int cutoff) {
  FockOperator d(dim_of(cutoff));
  if (m < 0 || n < 0 || m > cutoff || n > cutoff)
    throw TruncationError("dyad |" + std::to_string(m) + "><" + std::to_string(n) +
                              "| exceeds cutoff " + std::to_string(cutoff),
                          std::max(m, n));
  d(m, n) = 1.0;
  return d;
}

std::vector<cplx> fock_ket(int n, int cutoff) {
  std::vector<cplx> v(dim_of(cutoff));
  if (n < 0 || n > cutoff)
    throw TruncationError("Fock state |" + std::to_string(n) + "> exceeds cutoff " +
                              std::to_string(cutoff),
                          n);
  v[n] = 1.0;
  return v;
}

std::vector<cplx> coherent_ket(cplx alpha, int cutoff) {
  std::vector<cplx> v(dim_of(cutoff));
  const double damp = std::exp(-0.5 * std::norm(alpha));
  cplx amp = damp;
  for (int n = 0; n <= cutoff; ++n) {
    if (n > 0) amp *= alpha / std::sqrt(static_cast<double>(n));
    v[n] = amp;
  }
  return v;
}

double coherent_truncated_norm(cplx alpha, int cutoff) {
  double s = 0.0;
  for (const auto& c : coherent_ket(alpha, cutoff)) s += std::norm(c);
  return s;
}

int coherent_required_cutoff(cplx alpha, double tol) {
  const double x = std::norm(alpha);
  double term = std::exp(-x);
  double acc = term;
  int n = 0;
  // The second clause stops once the Poisson tail is below rounding in `acc`.
  while (acc < 1.0 - tol && !(n > x && term < 1e-3 * tol)) {
    ++n;
    term *= x / n;
    acc += term;
    if (n > 100000) throw DomainError("coherent_required_cutoff: amplitude too large");
  }
  return n;
}

Matrix tensor_product(const FockOperator& a, const FockOperator& b) {
  if (a.dim() != b.dim())
    throw ValidationError("tensor_product: cutoff mismatch " + std::to_string(a.cutoff()) +
                          " vs " + std::to_string(b.cutoff()));
  return kernels::kron(a, b);
}

}  // namespace cvmp
