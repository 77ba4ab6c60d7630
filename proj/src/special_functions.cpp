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

#include "cvmp/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cvmp/errors.hpp"

namespace cvmp {
namespace {

const std::array<long double, kMaxFactorialArg + 1>& factorial_table() {
  static const auto table = [] {
    std::array<long double, kMaxFactorialArg + 1> t{};
    t[0] = 1.0L;
    for (int n = 1; n <= kMaxFactorialArg; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

}  // namespace

double factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument " + std::to_string(n));
  if (n > kMaxFactorialArg)
    throw std::overflow_error("factorial: " + std::to_string(n) +
                              "! overflows double; use ln_factorial");
  return static_cast<double>(factorial_table()[n]);
}

double ln_factorial(int n) {
  if (n < 0) throw DomainError("ln_factorial: negative argument " + std::to_string(n));
  if (n <= kMaxFactorialArg) return static_cast<double>(std::log(factorial_table()[n]));
  return static_cast<double>(std::lgamma(static_cast<long double>(n) + 1.0L));
}

double binomial(long top, long k) {
  if (k < 0) return 0.0;
  long double r = 1.0L;
  for (long i = 0; i < k; ++i) {
    r *= static_cast<long double>(top - i);
    r /= static_cast<long double>(i + 1);
    if (r == 0.0L) break;
  }
  return static_cast<double>(r);
}

double laguerre(int n, int a, double x) {
  if (n < 0) throw DomainError("laguerre: negative degree");
  if (!std::isfinite(x)) throw DomainError("laguerre: non-finite argument");
  long double sum = 0.0L;
  long double power = 1.0L;  // x^j / j!
  for (int j = 0; j <= n; ++j) {
    if (j > 0) power *= static_cast<long double>(x) / j;
    const double b = binomial(static_cast<long>(n) + a, n - j);
    const long double term = static_cast<long double>(b) * power;
    sum += (j % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

double hyp2f1_terminating(double a, int n, double c, double z) {
  if (n < 0) throw DomainError("hyp2f1_terminating: second parameter must be nonpositive");
  int jmax = n;
  if (is_nonpositive_integer(a) && static_cast<int>(-a) < jmax) jmax = static_cast<int>(-a);
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int j = 0; j < jmax; ++j) {
    if (c + j == 0.0)
      throw DomainError("hyp2f1_terminating: pole in c = " + std::to_string(c));
    term *= static_cast<long double>(a + j) * static_cast<long double>(j - n) /
            (static_cast<long double>(c + j) * (j + 1)) * static_cast<long double>(z);
    sum += term;
  }
  return static_cast<double>(sum);
}

double hyp2f1_terminating_regularized(double a, int n, double c, double z) {
  if (n < 0) throw DomainError("hyp2f1_terminating_regularized: second parameter must be nonpositive");
  int jmax = n;
  if (is_nonpositive_integer(a) && static_cast<int>(-a) < jmax) jmax = static_cast<int>(-a);
  long double pochhammer = 1.0L;  // (a)_j (-n)_j z^j / j!
  long double sum = 0.0L;
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0)
      pochhammer *= static_cast<long double>(a + j - 1) * static_cast<long double>(j - 1 - n) /
                    j * static_cast<long double>(z);
    const double arg = c + j;
    if (is_nonpositive_integer(arg)) continue;
    sum += pochhammer / std::tgamma(static_cast<long double>(arg));
  }
  return static_cast<double>(sum);
}

double bessel_i0(double x) {
  if (x < 0.0) throw DomainError("bessel_i0: negative argument");
  const long double h2 = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 10000; ++k) {
    term *= h2 / (static_cast<long double>(k) * k);
    sum += term;
    if (term < 1e-21L * sum) break;
  }
  return static_cast<double>(sum);
}

double bessel_i1(double x) {
  if (x < 0.0) throw DomainError("bessel_i1: negative argument");
  const long double h = static_cast<long double>(x) / 2.0L;
  long double term = h;
  long double sum = h;
  for (int k = 1; k < 10000; ++k) {
    term *= h * h / (static_cast<long double>(k) * (k + 1));
    sum += term;
    if (term <= 1e-21L * sum) break;
  }
  return static_cast<double>(sum);
}

cplx poisson_amplitude(int n, cplx alpha) {
  if (n < 0) throw DomainError("poisson_amplitude: negative photon number");
  const double r = std::abs(alpha);
  if (r == 0.0) return n == 0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
  const double log_mag = -0.5 * r * r + n * std::log(r) - 0.5 * ln_factorial(n);
  return std::polar(std::exp(log_mag), n * std::arg(alpha));
}

}  // namespace cvmp
