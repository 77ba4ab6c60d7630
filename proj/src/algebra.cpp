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

#include "cvmp/algebra.hpp"

#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/special_functions.hpp"
#include "cvmp/tensor_basis.hpp"
#include "factorial_table.hpp"

namespace cvmp {
namespace {

cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// Single-stripe operators restricted to the cutoff without the reach check.
FockOperator truncated_monomial(const TensorIndex& idx, int cutoff) {
  FockOperator t(static_cast<std::size_t>(cutoff) + 1);
  const int q2 = idx.q2();
  for (int n = 0; n <= cutoff; ++n) {
    const int m = n + q2;
    if (m < 0 || m > cutoff) continue;
    t(m, n) = monomial_element(idx, n);
  }
  return t;
}

FockOperator truncated_inverse(const TensorIndex& idx, int cutoff) {
  FockOperator t(static_cast<std::size_t>(cutoff) + 1);
  const int aq2 = idx.abs_q2();
  for (int n = aq2; n <= std::min(idx.reach(), cutoff); ++n) {
    const double v = inverse_coefficient(idx, n);
    if (idx.q2() >= 0) {
      t(n - aq2, n) = v;
    } else {
      t(n, n - aq2) = v;
    }
  }
  return t;
}

}  // namespace

bool product_vanishes_by_rule(const TensorIndex& a, const TensorIndex& b) {
  return a.q2() >= 0 && b.q2() >= 0 && a.q2() > b.kmq();
}

TopCoefficient structure_top_coefficient(const TensorIndex& a, const TensorIndex& b) {
  if (a.q2() < 0 || b.q2() < 0)
    throw DomainError("structure_top_coefficient: requires q, q' >= 0");
  if (product_vanishes_by_rule(a, b)) return {0, 0.0};
  const int k2max = std::min(a.k2() + b.q2(), b.k2() - a.q2());
  const int sign_exp = (a.k2() + b.k2() + a.q2() - b.q2()) / 2;
  const long double denom = detail::fact_ld((k2max + a.q2() - b.q2()) / 2) *
                            detail::fact_ld((b.k2() - a.q2() - k2max) / 2) *
                            detail::fact_ld((a.k2() + b.q2() - k2max) / 2);
  return {k2max, static_cast<double>(detail::parity_sign(sign_exp) / denom)};
}

StructureExpansion product_expansion(const TensorIndex& a, const TensorIndex& b) {
  const int q2 = a.q2() + b.q2();
  if (q2 < 0) {
    // (A B)^dagger = B^dagger A^dagger, coefficients are real.
    auto e = product_expansion(b.conjugate(), a.conjugate());
    e.q2 = q2;
    return e;
  }
  StructureExpansion out;
  out.q2 = q2;
  if (product_vanishes_by_rule(a, b)) return out;
  const int cutoff = a.reach() + b.reach() + 1;
  FockOperator residual = inverse_matrix(a, cutoff) * inverse_matrix(b, cutoff);
  const double scale = std::max(1.0, residual.max_abs());
  constexpr double kZero = 1e-15;
  // Highest column carrying a nonzero stripe entry fixes K''max.
  int top_n = -1;
  for (int n = q2; n <= cutoff; ++n)
    if (std::abs(residual(n - q2, n)) > kZero * scale) top_n = n;
  const bool closed_top = a.q2() >= 0 && b.q2() >= 0;
  for (int n = top_n; n >= q2; --n) {
    const TensorIndex idx(2 * n - q2, q2);
    const cplx entry = residual(n - q2, n);
    if (std::abs(entry) <= kZero * scale) continue;
    double f = entry.real() / inverse_coefficient(idx, n);
    if (closed_top && n == top_n) {
      const auto top = structure_top_coefficient(a, b);
      if (top.k2 != idx.k2() || std::abs(top.coefficient - f) > 1e-12 * std::abs(f))
        throw ValidationError("product_expansion: top structure constant mismatch for " +
                              a.to_string() + " x " + b.to_string());
      f = top.coefficient;
    }
    out.terms.push_back({idx.k2(), f});
    auto t = inverse_matrix(idx, cutoff);
    t *= f;
    residual -= t;
  }
  if (residual.max_abs() > 1e-12 * scale)
    throw ValidationError("product_expansion: residual " + std::to_string(residual.max_abs()) +
                          " for " + a.to_string() + " x " + b.to_string());
  return out;
}

FockOperator assemble(const StructureExpansion& e, int cutoff) {
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (const auto& t : e.terms) {
    auto m = truncated_inverse(TensorIndex(t.k2, e.q2), cutoff);
    m *= t.coefficient;
    out += m;
  }
  return out;
}

std::vector<DisplacementTerm> displaced_monomial_expansion(cplx alpha, const TensorIndex& idx) {
  std::vector<DisplacementTerm> out;
  const int kpq = idx.kpq();
  const int kmq = idx.kmq();
  for (int s2 = 0; s2 <= idx.k2(); ++s2) {
    for (int l2 = -s2; l2 <= s2; l2 += 2) {
      const int spl = (s2 + l2) / 2;  // S + l
      const int sml = (s2 - l2) / 2;  // S - l
      if (spl > kpq || sml > kmq) continue;
      const double binom = binomial(kpq, spl) * binomial(kmq, sml);
      const cplx c = binom * ipow(-std::conj(alpha), kpq - spl) * ipow(-alpha, kmq - sml);
      if (c == cplx{}) continue;
      out.push_back({TensorIndex(s2, l2), c});
    }
  }
  return out;
}

std::vector<DisplacementTerm> displaced_inverse_expansion(cplx alpha, const TensorIndex& idx,
                                                          int s2max) {
  if (s2max < 0) throw DomainError("s2max must be nonnegative");
  std::vector<DisplacementTerm> out;
  const int kpq = idx.kpq();
  const int kmq = idx.kmq();
  for (int s2 = 0; s2 <= s2max; ++s2) {
    for (int l2 = -s2; l2 <= s2; l2 += 2) {
      const int spl = (s2 + l2) / 2;
      const int sml = (s2 - l2) / 2;
      const double binom = binomial(kpq + spl, kpq) * binomial(kmq + sml, kmq);
      const cplx c = binom * ipow(alpha, sml) * ipow(std::conj(alpha), spl);
      if (c == cplx{}) continue;
      out.push_back({TensorIndex(idx.k2() + s2, idx.q2() + l2), c});
    }
  }
  return out;
}

FockOperator assemble_monomials(const std::vector<DisplacementTerm>& terms, int cutoff) {
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (const auto& t : terms) {
    auto m = truncated_monomial(t.index, cutoff);
    m *= t.coefficient;
    out += m;
  }
  return out;
}

FockOperator assemble_inverses(const std::vector<DisplacementTerm>& terms, int cutoff) {
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (const auto& t : terms) {
    auto m = truncated_inverse(t.index, cutoff);
    m *= t.coefficient;
    out += m;
  }
  return out;
}

}  // namespace cvmp
