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

#include "cvmp/tensor_basis.hpp"

#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/special_functions.hpp"
#include "factorial_table.hpp"

namespace cvmp {
namespace {

void require_reach(const TensorIndex& idx, int cutoff, const char* what) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  if (cutoff < idx.reach())
    throw TruncationError(std::string(what) + " " + idx.to_string() + " needs cutoff >= " +
                              std::to_string(idx.reach()) + " (got " + std::to_string(cutoff) +
                              ")",
                          idx.reach());
}

OrthonormalityReport orthonormality_impl(int k2max, int cutoff, bool parallel) {
  if (k2max < 0) throw DomainError("k2max must be nonnegative");
  if (cutoff < 2 * k2max)
    throw TruncationError("orthonormality traces at k2max=" + std::to_string(k2max) +
                              " need cutoff >= " + std::to_string(2 * k2max),
                          2 * k2max);
  const auto idx = indices_up_to(k2max);
  std::vector<FockOperator> inv;
  std::vector<FockOperator> mono;
  for (const auto& i : idx) {
    inv.push_back(inverse_matrix(i, cutoff));
    mono.push_back(monomial_matrix(i, cutoff));
  }
  const long n = static_cast<long>(idx.size());
  std::vector<double> worst(idx.size(), 0.0);
  std::vector<std::size_t> worst_j(idx.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const cplx tr = kernels::trace_product_serial(inv[i], mono[j]);
      const double target = (static_cast<std::size_t>(i) == j) ? 1.0 : 0.0;
      const double dev = std::abs(tr - target);
      if (dev > worst[i]) {
        worst[i] = dev;
        worst_j[i] = j;
      }
    }
  }
  OrthonormalityReport rep;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (worst[i] > rep.max_deviation) {
      rep.max_deviation = worst[i];
      rep.worst_inverse = idx[i];
      rep.worst_monomial = idx[worst_j[i]];
    }
  }
  rep.pairs_checked = n * n;
  return rep;
}

}  // namespace

double monomial_element(const TensorIndex& idx, int n) {
  const int lo = n - idx.kmq();
  if (lo < 0 || n + idx.q2() < 0) return 0.0;
  const long double a = detail::falling_ratio_ld(n, lo);
  const long double b = detail::falling_ratio_ld(n + idx.q2(), lo);
  return static_cast<double>(std::sqrt(a) * std::sqrt(b));
}

double inverse_coefficient(const TensorIndex& idx, int n) {
  const int aq2 = idx.abs_q2();
  const int top = idx.reach();
  if (n < aq2 || n > top) return 0.0;
  const long double denom =
      detail::sqrt_fact_ld(n) * detail::sqrt_fact_ld(n - aq2) * detail::fact_ld(top - n);
  return static_cast<double>(detail::parity_sign(top + n) / denom);
}

FockOperator monomial_matrix(const TensorIndex& idx, int cutoff) {
  require_reach(idx, cutoff, "monomial");
  if (idx.q2() < 0) return monomial_matrix(idx.conjugate(), cutoff).adjoint();
  FockOperator t(static_cast<std::size_t>(cutoff) + 1);
  for (int n = idx.kmq(); n + idx.q2() <= cutoff; ++n) t(n + idx.q2(), n) = monomial_element(idx, n);
  return t;
}

FockOperator inverse_matrix(const TensorIndex& idx, int cutoff) {
  require_reach(idx, cutoff, "inverse operator");
  if (idx.q2() < 0) return inverse_matrix(idx.conjugate(), cutoff).adjoint();
  FockOperator t(static_cast<std::size_t>(cutoff) + 1);
  for (int n = idx.q2(); n <= idx.kpq(); ++n) t(n - idx.q2(), n) = inverse_coefficient(idx, n);
  return t;
}

bool StripePattern::contains(int row, int col) const {
  if (row < 0 || col < 0 || col - row != offset) return false;
  const int s = row + col;
  return s >= min_sum && s <= max_sum && (s - min_sum) % 2 == 0;
}

StripePattern support_pattern(const TensorIndex& idx) {
  return StripePattern{idx.q2(), idx.abs_q2(), idx.k2()};
}

OrthonormalityReport verify_orthonormality(int k2max, int cutoff) {
  return orthonormality_impl(k2max, cutoff, true);
}

OrthonormalityReport verify_orthonormality_serial(int k2max, int cutoff) {
  return orthonormality_impl(k2max, cutoff, false);
}

double inverse_trace_overlap(const TensorIndex& a, const TensorIndex& b) {
  if (a.q2() != -b.q2()) return 0.0;
  const int aq2 = a.abs_q2();
  const int ka = (a.k2() - aq2) / 2;  // K - |q|
  const int kb = (b.k2() - aq2) / 2;  // K' - |q|
  const int sign_exp = (a.k2() + b.k2()) / 2 + aq2;
  const double f = hyp2f1_terminating(-static_cast<double>(ka), kb, aq2 + 1.0, 1.0);
  return detail::parity_sign(sign_exp) * f /
         static_cast<double>(detail::fact_ld(aq2) * detail::fact_ld(ka) * detail::fact_ld(kb));
}

}  // namespace cvmp
