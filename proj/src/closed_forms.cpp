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

#include "cvmp/closed_forms.hpp"

#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/multipoles.hpp"
#include "cvmp/special_functions.hpp"
#include "factorial_table.hpp"

namespace cvmp {
namespace {

cplx ipow(cplx z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// Shared Laguerre form; `scale` is 1 (normal order) or 2 (Weyl).
cplx coherent_laguerre(cplx alpha, const TensorIndex& idx, double scale, long double pref) {
  const int q2 = idx.q2();
  if (alpha == cplx{} && q2 > 0) {
    const auto vac = DensityMatrix::from_pure(std::vector<cplx>{1.0});
    return (scale == 1.0) ? state_multipole(vac, idx) : weyl_state_multipole(vac, idx);
  }
  const double x = scale * std::norm(alpha);
  const double lag = laguerre(idx.kpq(), -q2, x);
  const double damp = std::exp(-x);
  const cplx ac = std::conj(alpha);
  // e^{-x} alpha*^{-2q} L: for q > 0 pull alpha*^{-2q} through as alpha^{2q} / |alpha|^{4q}.
  const cplx power = ipow(ac, -q2);
  return static_cast<double>(pref) * detail::parity_sign(idx.kpq()) * damp * lag * power;
}

}  // namespace

cplx coherent_multipole_closed(cplx alpha, const TensorIndex& idx) {
  if (idx.q2() < 0) return std::conj(coherent_multipole_closed(alpha, idx.conjugate()));
  return coherent_laguerre(alpha, idx, 1.0, 1.0L / detail::fact_ld(idx.kmq()));
}

cplx coherent_weyl_multipole_closed(cplx alpha, const TensorIndex& idx) {
  if (idx.q2() < 0) return std::conj(coherent_weyl_multipole_closed(alpha, idx.conjugate()));
  return coherent_laguerre(alpha, idx, 2.0,
                           std::ldexp(1.0L, idx.kmq() + 1) / detail::fact_ld(idx.kmq()));
}

cplx coherent_inverse_multipole_closed(cplx alpha, const TensorIndex& idx) {
  return ipow(std::conj(alpha), idx.kpq()) * ipow(alpha, idx.kmq());
}

double fock_multipole_closed(int n, const TensorIndex& idx) {
  if (n < 0) throw DomainError("Fock level must be nonnegative");
  if (idx.q2() != 0) return 0.0;
  const int K = idx.k2() / 2;
  if (n > K) return 0.0;
  return detail::parity_sign(K + n) / static_cast<double>(detail::fact_ld(n) * detail::fact_ld(K - n));
}

double fock_weyl_multipole_closed(int n, const TensorIndex& idx) {
  if (n < 0) throw DomainError("Fock level must be nonnegative");
  if (idx.q2() != 0) return 0.0;
  const int K = idx.k2() / 2;
  const double f = hyp2f1_terminating(K + 1.0, n, 1.0, 2.0);
  return detail::parity_sign(K) * static_cast<double>(std::ldexp(1.0L, K + 1) / detail::fact_ld(K)) * f;
}

double fock_inverse_multipole_closed(int n, const TensorIndex& idx) {
  if (n < 0) throw DomainError("Fock level must be nonnegative");
  if (idx.q2() != 0) return 0.0;
  const int K = idx.k2() / 2;
  if (K > n) return 0.0;
  return static_cast<double>(detail::falling_ratio_ld(n, n - K));
}

double dyad_multipole_closed(int m, int n, const TensorIndex& idx) {
  if (m < 0 || n < 0) throw DomainError("Fock levels must be nonnegative");
  if (idx.q2() < 0) return dyad_multipole_closed(n, m, idx.conjugate());
  if (n - m != idx.q2()) return 0.0;
  const int kpq = idx.kpq();
  if (n > kpq) return 0.0;
  const long double root = std::sqrt(detail::falling_ratio_ld(n, m));
  return detail::parity_sign(kpq + n) *
         static_cast<double>(root * static_cast<long double>(binomial(kpq, n)) / detail::fact_ld(kpq));
}

double dyad_weyl_multipole_closed(int m, int n, const TensorIndex& idx) {
  if (m < 0 || n < 0) throw DomainError("Fock levels must be nonnegative");
  if (idx.q2() < 0) return dyad_weyl_multipole_closed(n, m, idx.conjugate());
  if (n - m != idx.q2()) return 0.0;
  // (-1)^{K+3q}/(K-q)! sqrt(n!/(n-2q)!) 2^{K+q+1} 2F1~(K+q+1, 2q-n; 2q+1; 2),
  // summed directly in the unregularized parameters.
  const int kpq = idx.kpq();
  const int kmq = idx.kmq();
  const double f = hyp2f1_terminating_regularized(kpq + 1.0, m, idx.q2() + 1.0, 2.0);
  const long double pref = std::ldexp(1.0L, kpq + 1) * std::sqrt(detail::falling_ratio_ld(n, m)) /
                           detail::fact_ld(kmq);
  return detail::parity_sign(kpq + idx.q2()) * static_cast<double>(pref) * f;
}

}  // namespace cvmp
