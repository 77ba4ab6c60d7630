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
#include <string_view>
#include <vector>

namespace cvmp {

/// Inverse cumulative sum of sqrt(p0)|0> + sqrt(p1)|1> - sqrt(p2)|2> at order m2.
double qutrit_value(double p0, double p1, double p2, int m2);

/// Coefficients of the exact quartic form
///   c0 p0^2 + c1 p1^2 + c2 p2^2 + c3 p0 p1 + c4 p0 p2 + c5 p1 p2 + c6 p1 sqrt(p0 p2).
struct QutritForm {
  static constexpr std::array<std::string_view, 7> kMonomials = {
      "p0^2", "p1^2", "p2^2", "p0*p1", "p0*p2", "p1*p2", "p1*sqrt(p0*p2)"};

  int m2 = 0;
  std::array<double, 7> coefficients{};
  /// 2-norm condition number of the 7x7 probe design.
  double condition = 0.0;

  double evaluate(double p0, double p1, double p2) const;
};

/// The seven probe points (p0, p1, p2) used by qutrit_form.
std::array<std::array<double, 3>, 7> qutrit_probes();

/// Solves the 7x7 system of the form against exact evaluations at the probes.
/// Requires m2 >= 4.
QutritForm qutrit_form(int m2);

struct QutritPoint {
  double p0 = 0.0;
  double p1 = 0.0;
  double value = 0.0;
};

struct QutritScan {
  int m2 = 0;
  int grid = 0;
  std::vector<QutritPoint> points;
  QutritPoint best;
};

/// Values on p0 = i/(g-1), p1 = j/(g-1), i + j <= g-1. Parallel over i.
QutritScan scan_qutrit(int m2, int grid);
QutritScan scan_qutrit_serial(int m2, int grid);

}  // namespace cvmp
