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

#include "cvmp/multipoles.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "cvmp/errors.hpp"
#include "cvmp/tensor_basis.hpp"
#include "cvmp/weyl_basis.hpp"

namespace cvmp {
namespace {

// Sum over the stripe of F coupled by an operator B that lowers by 2q:
// Tr(B F) = sum_n B[n-2q, n] F[n, n-2q] for q >= 0 (mirror for q < 0).
template <typename Coef>
cplx stripe_sum(const FockOperator& f, const TensorIndex& idx, int top, Coef coef) {
  const int aq2 = idx.abs_q2();
  const int last = std::min(top, f.cutoff());
  cplx s = 0.0;
  for (int n = aq2; n <= last; ++n) {
    const double c = coef(n);
    if (c == 0.0) continue;
    s += c * ((idx.q2() >= 0) ? f(n, n - aq2) : f(n - aq2, n));
  }
  return s;
}

// Tr(T F) = sum_n T[n+2q, n] F[n, n+2q].
template <typename Elem>
cplx raising_sum(const FockOperator& f, const TensorIndex& idx, Elem elem) {
  cplx s = 0.0;
  for (int n = 0; n <= f.cutoff(); ++n) {
    const int m = n + idx.q2();
    if (m < 0 || m > f.cutoff()) continue;
    const cplx fv = f(n, m);
    if (fv == cplx{}) continue;
    s += elem(n) * fv;
  }
  return s;
}

void require_direct_rule(const DensityMatrix& rho, const TensorIndex& idx) {
  const int need = rho.support_bound() + idx.k2();
  if (need > rho.cutoff())
    throw TruncationError("direct multipole " + idx.to_string() + " needs cutoff >= " +
                              std::to_string(need) + " (support " +
                              std::to_string(rho.support_bound()) + " + 2K), got " +
                              std::to_string(rho.cutoff()),
                          need);
}

cplx direct_unchecked(const FockOperator& f, const TensorIndex& idx) {
  return raising_sum(f, idx, [&](int n) { return monomial_element(idx, n); });
}

MultipoleTable table_impl(const DensityMatrix& rho, int m2, Basis basis, bool parallel) {
  if (m2 < 0) throw DomainError("m2 must be nonnegative");
  const auto idx = indices_up_to(m2);
  std::vector<cplx> values(idx.size());
  std::exception_ptr error;
  const long n = static_cast<long>(idx.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      values[i] = multipole(rho, idx[i], basis);
    } catch (...) {
#pragma omp critical(cvmp_table_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  MultipoleTable t{basis, m2, {}};
  for (std::size_t i = 0; i < idx.size(); ++i) t.entries.emplace(idx[i], values[i]);
  return t;
}

}  // namespace

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::InverseNormal:
      return "inverse";
    case Basis::DirectNormal:
      return "direct";
    case Basis::InverseWeyl:
      return "inverse-weyl";
    case Basis::DirectWeyl:
      return "direct-weyl";
  }
  return "?";
}

Basis parse_basis(std::string_view s) {
  if (s == "inverse") return Basis::InverseNormal;
  if (s == "direct") return Basis::DirectNormal;
  if (s == "inverse-weyl") return Basis::InverseWeyl;
  if (s == "direct-weyl") return Basis::DirectWeyl;
  throw ParseError("unknown basis '" + std::string(s) + "'", 0);
}

cplx MultipoleTable::at(const TensorIndex& idx) const {
  const auto it = entries.find(idx);
  return it == entries.end() ? cplx{} : it->second;
}

double MultipoleTable::conjugation_defect() const {
  double d = 0.0;
  for (const auto& [idx, v] : entries)
    d = std::max(d, std::abs(at(idx.conjugate()) - std::conj(v)));
  return d;
}

cplx stripe_trace(const FockOperator& f, const TensorIndex& idx) {
  return stripe_sum(f, idx, idx.reach(), [&](int n) { return inverse_coefficient(idx, n); });
}

cplx state_multipole(const DensityMatrix& rho, const TensorIndex& idx) {
  return stripe_trace(rho.op(), idx);
}

cplx inverse_multipole(const DensityMatrix& rho, const TensorIndex& idx) {
  require_direct_rule(rho, idx);
  return direct_unchecked(rho.op(), idx);
}

cplx weyl_state_multipole(const DensityMatrix& rho, const TensorIndex& idx) {
  return stripe_sum(rho.op(), idx, rho.cutoff(),
                    [&](int n) { return inverse_weyl_coefficient(idx, n); });
}

cplx weyl_inverse_multipole(const DensityMatrix& rho, const TensorIndex& idx) {
  require_direct_rule(rho, idx);
  cplx s = 0.0;
  for (const auto& t : weyl_to_normal(idx))
    s += t.coefficient * direct_unchecked(rho.op(), TensorIndex(t.k2, idx.q2()));
  return s;
}

cplx multipole(const DensityMatrix& rho, const TensorIndex& idx, Basis basis) {
  switch (basis) {
    case Basis::InverseNormal:
      return state_multipole(rho, idx);
    case Basis::DirectNormal:
      return inverse_multipole(rho, idx);
    case Basis::InverseWeyl:
      return weyl_state_multipole(rho, idx);
    case Basis::DirectWeyl:
      return weyl_inverse_multipole(rho, idx);
  }
  return {};
}

MultipoleTable multipole_table(const DensityMatrix& rho, int m2, Basis basis) {
  return table_impl(rho, m2, basis, true);
}

MultipoleTable multipole_table_serial(const DensityMatrix& rho, int m2, Basis basis) {
  return table_impl(rho, m2, basis, false);
}

FockOperator reconstruct(const MultipoleTable& table, int cutoff) {
  if (table.basis != Basis::InverseNormal)
    throw ValidationError("reconstruct: requires an inverse-normal table");
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  FockOperator out(static_cast<std::size_t>(cutoff) + 1);
  for (const auto& [idx, c] : table.entries) {
    if (c == cplx{}) continue;
    for (int n = idx.kmq(); n + idx.q2() <= cutoff; ++n) {
      if (n > cutoff) break;
      out(n + idx.q2(), n) += c * monomial_element(idx, n);
    }
  }
  return out;
}

double purity_from_multipoles(const DensityMatrix& rho, int m2) {
  // Both factors are exact finite sums over the support, so no cutoff rule.
  double s = 0.0;
  for (const auto& idx : indices_up_to(m2))
    s += (state_multipole(rho, idx) * direct_unchecked(rho.op(), idx)).real();
  return s;
}

MultipoleTable expand_operator(const FockOperator& f, int m2) {
  if (m2 < 0) throw DomainError("m2 must be nonnegative");
  MultipoleTable t{Basis::InverseNormal, m2, {}};
  for (const auto& idx : indices_up_to(m2)) t.entries.emplace(idx, stripe_trace(f, idx));
  return t;
}

}  // namespace cvmp
