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

#include "cvmp/joint_operator.hpp"

#include <algorithm>
#include <cmath>

#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "cvmp/jacobi.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/tensor_basis.hpp"

namespace cvmp {
namespace {

void require_cutoff(int m2, int cutoff) {
  if (m2 < 0) throw DomainError("m2 must be nonnegative");
  if (cutoff < m2)
    throw TruncationError("joint operator of order m2=" + std::to_string(m2) +
                              " needs cutoff >= " + std::to_string(m2),
                          m2);
}

struct Entry {
  int row;
  int col;
  double value;
};

// Nonzero entries (row, col, value) of the inverse operator.
std::vector<Entry> stripe_entries(const TensorIndex& idx) {
  std::vector<Entry> out;
  const int aq2 = idx.abs_q2();
  for (int n = aq2; n <= idx.reach(); ++n) {
    const double v = inverse_coefficient(idx, n);
    if (idx.q2() >= 0) {
      out.push_back({n - aq2, n, v});
    } else {
      out.push_back({n, n - aq2, v});
    }
  }
  return out;
}

// Basis vectors of one exchange sector as sparse (joint index, amplitude) lists.
std::vector<std::vector<std::pair<std::size_t, double>>> sector_basis(int cutoff, bool symmetric) {
  std::vector<std::vector<std::pair<std::size_t, double>>> basis;
  const double r = std::sqrt(0.5);
  for (int a = 0; a <= cutoff; ++a) {
    if (symmetric) basis.push_back({{joint_index(a, a, cutoff), 1.0}});
    for (int b = a + 1; b <= cutoff; ++b)
      basis.push_back({{joint_index(a, b, cutoff), r},
                       {joint_index(b, a, cutoff), symmetric ? r : -r}});
  }
  return basis;
}

void solve_sector(const Matrix& full, int cutoff, bool symmetric,
                  std::vector<JointEigenpair>& out) {
  const auto basis = sector_basis(cutoff, symmetric);
  const std::size_t d = basis.size();
  if (d == 0) return;
  Matrix proj(d);
  const long ld = static_cast<long>(d);
#pragma omp parallel for schedule(dynamic) if (ld >= 64)
  for (long i = 0; i < ld; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cplx s = 0.0;
      for (const auto& [ri, ai] : basis[i])
        for (const auto& [cj, aj] : basis[j]) s += ai * full(ri, cj) * aj;
      proj(i, j) = s;
    }
  }
  const auto eig = hermitian_eigensolve(proj);
  for (std::size_t k = 0; k < d; ++k) {
    JointEigenpair p;
    p.value = eig.values[k];
    p.vector.assign(full.dim(), 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      const cplx c = eig.vectors(i, k);
      for (const auto& [ri, ai] : basis[i]) p.vector[ri] += ai * c;
    }
    p.swap_expectation = swap_expectation(p.vector, cutoff);
    p.exchange = symmetric ? Exchange::Symmetric : Exchange::Antisymmetric;
    out.push_back(std::move(p));
  }
}

Exchange classify(double swap) {
  if (std::abs(swap - 1.0) <= kExchangeTol) return Exchange::Symmetric;
  if (std::abs(swap + 1.0) <= kExchangeTol) return Exchange::Antisymmetric;
  return Exchange::Mixed;
}

}  // namespace

JointOperator build_joint_operator(int m2, int cutoff) {
  require_cutoff(m2, cutoff);
  const std::size_t dim = static_cast<std::size_t>(cutoff + 1) * (cutoff + 1);
  JointOperator j{m2, cutoff, Matrix(dim)};
  for (const auto& idx : indices_up_to(m2)) {
    const auto a = stripe_entries(idx);
    const auto b = stripe_entries(idx.conjugate());
    for (const auto& ea : a)
      for (const auto& eb : b)
        j.matrix(joint_index(ea.row, eb.row, cutoff), joint_index(ea.col, eb.col, cutoff)) +=
            ea.value * eb.value;
  }
  return j;
}

JointOperator build_joint_operator_kron(int m2, int cutoff) {
  require_cutoff(m2, cutoff);
  const std::size_t dim = static_cast<std::size_t>(cutoff + 1) * (cutoff + 1);
  JointOperator j{m2, cutoff, Matrix(dim)};
  for (const auto& idx : indices_up_to(m2))
    j.matrix += kernels::kron_serial(inverse_matrix(idx, cutoff), inverse_matrix(idx.conjugate(), cutoff));
  return j;
}

double duplicated_expectation(const JointOperator& a, const DensityMatrix& rho) {
  if (rho.support_bound() > a.cutoff)
    throw TruncationError("state support exceeds joint-operator cutoff", rho.support_bound());
  const auto r = rho.op().resized(static_cast<std::size_t>(a.cutoff) + 1);
  return kernels::trace_product(a.matrix, kernels::kron(r, r)).real();
}

const char* to_string(Exchange e) {
  switch (e) {
    case Exchange::Symmetric:
      return "symmetric";
    case Exchange::Antisymmetric:
      return "antisymmetric";
    case Exchange::Mixed:
      return "mixed";
  }
  return "?";
}

double swap_expectation(const std::vector<cplx>& v, int cutoff) {
  cplx s = 0.0;
  for (int a = 0; a <= cutoff; ++a)
    for (int b = 0; b <= cutoff; ++b)
      s += std::conj(v[joint_index(a, b, cutoff)]) * v[joint_index(b, a, cutoff)];
  return s.real();
}

std::vector<JointEigenpair> full_spectrum(const JointOperator& a) {
  const auto eig = hermitian_eigensolve(a.matrix);
  std::vector<JointEigenpair> out;
  for (std::size_t k = 0; k < eig.dim; ++k) {
    JointEigenpair p;
    p.value = eig.values[k];
    p.vector = eig.vector(k);
    p.swap_expectation = swap_expectation(p.vector, a.cutoff);
    p.exchange = classify(p.swap_expectation);
    out.push_back(std::move(p));
  }
  return out;
}

JointSpectrum eigenanalysis(int m2, int cutoff, int top) {
  const auto op = build_joint_operator(m2, cutoff);
  std::vector<JointEigenpair> pairs;
  solve_sector(op.matrix, cutoff, true, pairs);
  solve_sector(op.matrix, cutoff, false, pairs);
  for (auto& p : pairs) p.exchange = classify(p.swap_expectation);

  JointSpectrum s;
  s.m2 = m2;
  s.cutoff = cutoff;
  const auto i00 = joint_index(0, 0, cutoff);
  const JointEigenpair* most_neg = &pairs.front();
  const JointEigenpair* vac = &pairs.front();
  const JointEigenpair* sym_max = nullptr;
  double max_abs = 0.0;
  for (const auto& p : pairs) {
    max_abs = std::max(max_abs, std::abs(p.value));
    if (p.value < most_neg->value) most_neg = &p;
    if (std::norm(p.vector[i00]) > std::norm(vac->vector[i00])) vac = &p;
    if (p.exchange == Exchange::Symmetric && (!sym_max || p.value > sym_max->value)) sym_max = &p;
  }
  s.most_negative = most_neg->value;
  if (cutoff >= 1) {
    const double r = std::sqrt(0.5);
    const cplx ov = r * (most_neg->vector[joint_index(0, 1, cutoff)] -
                         most_neg->vector[joint_index(1, 0, cutoff)]);
    s.antisymmetric_overlap = std::norm(ov);
  }
  s.most_negative_is_largest_magnitude = std::abs(most_neg->value) >= max_abs * (1.0 - 1e-12);
  s.vacuum_eigenvalue = vac->value;
  s.symmetric_max = sym_max ? sym_max->value : 0.0;
  s.vacuum_ratio = (s.symmetric_max != 0.0) ? s.vacuum_eigenvalue / s.symmetric_max : 0.0;
  if (cutoff >= 2 && sym_max) {
    const cplx v11 = sym_max->vector[joint_index(1, 1, cutoff)];
    const cplx v02 = sym_max->vector[joint_index(0, 2, cutoff)];
    s.eleven_overlap = std::norm(v11);
    if (std::abs(v02) > 0.0) s.c_constant = (-v11 / v02).real();
  }

  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::abs(x.value) > std::abs(y.value);
  });
  if (top > 0 && pairs.size() > static_cast<std::size_t>(top)) pairs.resize(top);
  s.top = std::move(pairs);
  return s;
}

}  // namespace cvmp
