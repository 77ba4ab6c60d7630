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

#include "cvmp/weyl_basis.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/special_functions.hpp"
#include "cvmp/tensor_basis.hpp"
#include "factorial_table.hpp"

namespace cvmp {
namespace {

// The triangular solve cancels roughly 2^{K'} in magnitude; 160 digits keep
// k2_series up to ~800 meaningful.
using wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

void require_reach(const TensorIndex& idx, int cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  if (cutoff < idx.reach())
    throw TruncationError("Weyl monomial " + idx.to_string() + " needs cutoff >= " +
                              std::to_string(idx.reach()),
                          idx.reach());
}

}  // namespace

std::vector<WeylTerm> weyl_to_normal(const TensorIndex& idx) {
  std::vector<WeylTerm> out;
  const int a = idx.kpq();
  const int b = idx.kmq();
  long double c = 1.0L;
  for (int n = 0; n <= std::min(a, b); ++n) {
    // c_n = a! b! / (2^n n! (a-n)! (b-n)!) by term ratio.
    if (n > 0) c *= static_cast<long double>(a - n + 1) * (b - n + 1) / (2.0L * n);
    out.push_back({idx.k2() - 2 * n, static_cast<double>(c)});
  }
  return out;
}

double monomial_weyl_element(const TensorIndex& idx, int n) {
  double s = 0.0;
  for (const auto& t : weyl_to_normal(idx))
    s += t.coefficient * monomial_element(TensorIndex(t.k2, idx.q2()), n);
  return s;
}

FockOperator monomial_weyl_matrix(const TensorIndex& idx, int cutoff) {
  require_reach(idx, cutoff);
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (const auto& t : weyl_to_normal(idx)) {
    auto m = monomial_matrix(TensorIndex(t.k2, idx.q2()), cutoff);
    m *= t.coefficient;
    out += m;
  }
  return out;
}

double inverse_weyl_coefficient(const TensorIndex& idx, int n) {
  const int aq2 = idx.abs_q2();
  if (n < aq2) return 0.0;
  const int m = n - aq2;
  const int kpq = idx.reach();                // K + |q|
  const int kmq = (idx.k2() - aq2) / 2;       // K - |q|
  const int sign_exp = kpq + aq2 + m;         // (-1)^{K+3|q|} times Pfaff (-1)^m
  // 2F1(K+|q|+1, -m; 2|q|+1; 2) = (-1)^m 2F1(|q|-K, -m; 2|q|+1; 2), which
  // terminates after K-|q|+1 positive terms.
  const double f = hyp2f1_terminating(-static_cast<double>(kmq), m, aq2 + 1.0, 2.0);
  const long double pref = std::ldexp(1.0L, kpq + 1) * std::sqrt(detail::falling_ratio_ld(n, m)) /
                           (detail::fact_ld(kmq) * detail::fact_ld(aq2));
  return detail::parity_sign(sign_exp) * static_cast<double>(pref * f);
}

FockOperator inverse_weyl_matrix(const TensorIndex& idx, int cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  if (idx.q2() < 0) return inverse_weyl_matrix(idx.conjugate(), cutoff).adjoint();
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (int n = idx.q2(); n <= cutoff; ++n) out(n - idx.q2(), n) = inverse_weyl_coefficient(idx, n);
  return out;
}

FockOperator inverse_weyl_matrix_from_series(const TensorIndex& idx, int cutoff, int k2_series) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  if (idx.q2() < 0)
    return inverse_weyl_matrix_from_series(idx.conjugate(), cutoff, k2_series).adjoint();
  const int q2 = idx.q2();
  // Orders K' = K, K+1, ... as doubled k2' = k2 + 2j.
  const int count = (k2_series >= idx.k2()) ? (k2_series - idx.k2()) / 2 + 1 : 1;
  const int top_fact = (k2_series + q2) / 2 + 2;
  std::vector<wide> fact(static_cast<std::size_t>(top_fact) + count + 2);
  for (std::size_t i = 0; i < fact.size(); ++i) fact[i] = (i == 0) ? wide(1) : fact[i - 1] * wide(i);
  auto kp = [&](int j) { return (idx.k2() + 2 * j + q2) / 2; };  // K'+q
  auto km = [&](int j) { return (idx.k2() + 2 * j - q2) / 2; };  // K'-q
  // C(j'', j') = coefficient of T_{K'} in T^W_{K''}, n = j'' - j'.
  auto conv = [&](int jpp, int jp) {
    const int n = jpp - jp;
    return fact[kp(jpp)] * fact[km(jpp)] /
           (pow(wide(2), n) * fact[n] * fact[kp(jp)] * fact[km(jp)]);
  };
  std::vector<wide> x(static_cast<std::size_t>(count));
  x[0] = 1;
  for (int j = 1; j < count; ++j) {
    wide s = 0;
    for (int jp = 0; jp < j; ++jp) s += x[jp] * conv(j, jp);
    x[j] = -s;
  }
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (int n = q2; n <= cutoff; ++n) {
    wide s = 0;
    for (int j = 0; j < count; ++j) {
      const int top = kp(j);
      if (n > top) continue;
      const wide term = x[j] / fact[top - n];
      s += ((top + n) % 2 == 0) ? term : wide(-term);
    }
    const long double norm = detail::sqrt_fact_ld(n) * detail::sqrt_fact_ld(n - q2);
    out(n - q2, n) = static_cast<double>(static_cast<long double>(s) / norm);
  }
  return out;
}

double weyl_pairing(const TensorIndex& inv, const TensorIndex& mono, int cutoff) {
  if (inv.q2() != mono.q2()) return 0.0;
  const int aq2 = inv.abs_q2();
  const TensorIndex a(inv.k2(), aq2);
  const TensorIndex b(mono.k2(), aq2);
  std::vector<double> partial;
  double s = 0.0;
  for (int n = aq2; n <= cutoff; ++n) {
    s += inverse_weyl_coefficient(a, n) * monomial_weyl_element(b, n - aq2);
    partial.push_back(s);
  }
  if (partial.empty()) return 0.0;
  const int rounds = std::min<int>(static_cast<int>(partial.size()) - 1,
                                   (inv.k2() + mono.k2()) / 2 + 2);
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i)
      partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    partial.pop_back();
  }
  return partial.back();
}

}  // namespace cvmp
