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

#include <complex>

namespace cvmp {

using cplx = std::complex<double>;

/// Largest n for which n! is finite in double precision.
inline constexpr int kMaxFactorialArg = 170;

/// n! as a double. Exact for n <= 22. Throws DomainError for n < 0 and
/// std::overflow_error for n > 170 (use ln_factorial there).
double factorial(int n);

/// ln(n!) with relative error below 1e-14.
double ln_factorial(int n);

/// Generalized binomial C(top, k) = top (top-1) ... (top-k+1) / k! for any
/// integer top (including negative) and k >= 0; zero for k < 0.
double binomial(long top, long k);

/// Generalized Laguerre polynomial L_n^{(a)}(x) for integer a of either sign,
/// via the finite sum  sum_j (-1)^j C(n+a, n-j) x^j / j!.
double laguerre(int n, int a, double x);

/// Terminating Gauss hypergeometric 2F1(a, -n; c; z).
/// If `a` is itself a nonpositive integer the shorter termination is used.
/// Throws DomainError when a Pochhammer factor of `c` vanishes before the
/// series terminates.
double hyp2f1_terminating(double a, int n, double c, double z);

/// Regularized terminating sum 2F1~(a, -n; c; z) = sum_j (a)_j (-n)_j z^j / (Gamma(c+j) j!).
/// Terms with Gamma poles vanish, so no domain error is raised.
double hyp2f1_terminating_regularized(double a, int n, double c, double z);

/// Modified Bessel function I0(x) = sum_k (x/2)^{2k} / k!^2 for x >= 0.
double bessel_i0(double x);

/// Modified Bessel function I1(x) = sum_k (x/2)^{2k+1} / (k! (k+1)!).
double bessel_i1(double x);

/// Coherent-state Fock amplitude exp(-|alpha|^2/2) alpha^n / sqrt(n!).
cplx poisson_amplitude(int n, cplx alpha);

}  // namespace cvmp
