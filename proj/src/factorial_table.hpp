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

#include <array>
#include <cmath>

namespace cvmp::detail {

// n! in extended precision; finite up to 1754! on x87 long double.
inline constexpr int kMaxLongFactorial = 1754;

inline const std::array<long double, kMaxLongFactorial + 1>& long_factorials() {
  static const auto table = [] {
    std::array<long double, kMaxLongFactorial + 1> t{};
    t[0] = 1.0L;
    for (int n = 1; n <= kMaxLongFactorial; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

inline long double fact_ld(int n) {
  if (n <= kMaxLongFactorial) return long_factorials()[n];
  return HUGE_VALL;
}

inline long double sqrt_fact_ld(int n) {
  if (n <= kMaxLongFactorial) return std::sqrt(long_factorials()[n]);
  return std::exp(0.5L * std::lgamma(static_cast<long double>(n) + 1.0L));
}

/// n! / m! for n >= m as a product of consecutive integers.
inline long double falling_ratio_ld(int n, int m) {
  long double r = 1.0L;
  for (int i = m + 1; i <= n; ++i) r *= i;
  return r;
}

inline int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace cvmp::detail
