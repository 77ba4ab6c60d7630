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

#include "cvmp/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"
#include "cvmp/jacobi.hpp"
#include "cvmp/kernels.hpp"

namespace cvmp {
namespace {

constexpr double kCoherentNormTol = 1e-8;
constexpr double kCoherentSupportTol = 1e-15;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void require_coherent_fits(cplx alpha, int cutoff) {
  const double norm = coherent_truncated_norm(alpha, cutoff);
  if (norm < 1.0 - kCoherentNormTol) {
    const int need = coherent_required_cutoff(alpha, kCoherentNormTol);
    throw TruncationError("coherent amplitude |alpha|^2=" + fmt(std::norm(alpha)) +
                              " needs cutoff >= " + std::to_string(need) + " (got " +
                              std::to_string(cutoff) + ")",
                          need);
  }
}

}  // namespace

DensityMatrix DensityMatrix::validated(FockOperator op) {
  if (op.dim() == 0) throw ValidationError("density matrix: empty");
  if (!op.all_finite()) throw ValidationError("density matrix: non-finite entries");
  const double herm = op.hermiticity_defect();
  if (herm >= kHermitianTol)
    throw ValidationError("density matrix: not Hermitian (defect " + fmt(herm) + ")");
  const cplx tr = op.trace();
  if (std::abs(tr - 1.0) >= kTraceTol)
    throw ValidationError("density matrix: trace " + fmt(tr.real()) + " is not 1");
  const auto eig = hermitian_eigensolve(op);
  const double min_ev = eig.values.back();
  if (min_ev < -kPositivityTol)
    throw ValidationError("density matrix: not positive semidefinite (min eigenvalue " +
                          fmt(min_ev) + ")");
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::from_pure(std::span<const cplx> psi) {
  double norm = 0.0;
  for (const auto& c : psi) norm += std::norm(c);
  if (psi.empty() || !(norm > 0.0)) throw ValidationError("pure state: zero vector");
  FockOperator op(psi.size());
  for (std::size_t r = 0; r < psi.size(); ++r)
    for (std::size_t c = 0; c < psi.size(); ++c) op(r, c) = psi[r] * std::conj(psi[c]) / norm;
  // Exact Hermiticity; rounding in the division can leave 1-ulp asymmetry.
  for (std::size_t r = 0; r < psi.size(); ++r) {
    op(r, r) = op(r, r).real();
    for (std::size_t c = r + 1; c < psi.size(); ++c) op(c, r) = std::conj(op(r, c));
  }
  return DensityMatrix(std::move(op));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const DensityMatrix> states) {
  if (weights.size() != states.size() || states.empty())
    throw ValidationError("mixture: weight/state count mismatch");
  FockOperator op(states.front().dim());
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (weights[i] < 0.0) throw ValidationError("mixture: negative weight");
    if (states[i].dim() != op.dim()) throw ValidationError("mixture: cutoff mismatch");
    total += weights[i];
    op += states[i].op() * cplx(weights[i]);
  }
  if (std::abs(total - 1.0) >= kTraceTol) throw ValidationError("mixture: weights do not sum to 1");
  return DensityMatrix(std::move(op));
}

int DensityMatrix::support_bound() const {
  for (int n = cutoff(); n > 0; --n) {
    for (int k = 0; k <= cutoff(); ++k)
      if (op_(n, k) != cplx{} || op_(k, n) != cplx{}) return n;
  }
  return 0;
}

DensityMatrix DensityMatrix::embedded(int cutoff) const {
  if (cutoff < support_bound())
    throw TruncationError("cannot crop state supported up to n=" +
                              std::to_string(support_bound()) + " to cutoff " +
                              std::to_string(cutoff),
                          support_bound());
  return DensityMatrix(op_.resized(static_cast<std::size_t>(cutoff) + 1));
}

cplx DensityMatrix::expectation(const FockOperator& a) const {
  return kernels::trace_product(op_, a);
}

double purity(const DensityMatrix& rho) {
  return kernels::trace_product(rho.op(), rho.op()).real();
}

std::vector<cplx> cat_ket(const CatSpec& spec, int cutoff) {
  if (spec.branches < 1) throw ValidationError("cat: branch count must be positive");
  if (!spec.amplitudes.empty() && static_cast<int>(spec.amplitudes.size()) != spec.branches)
    throw ValidationError("cat: expected " + std::to_string(spec.branches) + " amplitudes");
  require_coherent_fits(spec.alpha, cutoff);
  std::vector<cplx> psi(static_cast<std::size_t>(cutoff) + 1);
  for (int l = 0; l < spec.branches; ++l) {
    const cplx amp = spec.amplitudes.empty() ? cplx(1.0) : spec.amplitudes[l];
    const cplx branch = spec.alpha * std::polar(1.0, 2.0 * std::numbers::pi * l / spec.branches);
    const auto ket = coherent_ket(branch, cutoff);
    for (std::size_t n = 0; n < psi.size(); ++n) psi[n] += amp * ket[n];
  }
  double norm = 0.0;
  for (const auto& c : psi) norm += std::norm(c);
  if (norm < 1e-24) throw ValidationError("cat: branch amplitudes cancel to the zero vector");
  for (auto& c : psi) c /= std::sqrt(norm);
  return psi;
}

DensityMatrix make_state(const StateSpec& spec, int cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  return std::visit(
      [cutoff](const auto& s) -> DensityMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockSpec>) {
          return DensityMatrix::from_pure(fock_ket(s.n, cutoff));
        } else if constexpr (std::is_same_v<T, CoherentSpec>) {
          require_coherent_fits(s.alpha, cutoff);
          return DensityMatrix::from_pure(coherent_ket(s.alpha, cutoff));
        } else if constexpr (std::is_same_v<T, CatSpec>) {
          return DensityMatrix::from_pure(cat_ket(s, cutoff));
        } else if constexpr (std::is_same_v<T, DyadSpec>) {
          if (s.m < 0 || s.n < 0) throw DomainError("dyad: negative level");
          if (s.m == s.n) throw ValidationError("dyad: levels must differ");
          if (std::abs(s.mixing) > 1.0 + 1e-15)
            throw ValidationError("dyad: |mixing| must not exceed 1");
          const int top = std::max(s.m, s.n);
          if (top > cutoff)
            throw TruncationError("dyad level " + std::to_string(top) + " exceeds cutoff " +
                                      std::to_string(cutoff),
                                  top);
          FockOperator op(static_cast<std::size_t>(cutoff) + 1);
          op(s.m, s.m) = 0.5;
          op(s.n, s.n) = 0.5;
          op(s.m, s.n) = 0.5 * s.mixing;
          op(s.n, s.m) = 0.5 * std::conj(s.mixing);
          return DensityMatrix::validated(std::move(op));
        } else {
          const auto rho = DensityMatrix::validated(s.matrix);
          return rho.embedded(cutoff);
        }
      },
      spec);
}

int required_cutoff(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockSpec>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, CoherentSpec>) {
          return coherent_required_cutoff(s.alpha, kCoherentSupportTol);
        } else if constexpr (std::is_same_v<T, CatSpec>) {
          return coherent_required_cutoff(s.alpha, kCoherentSupportTol);
        } else if constexpr (std::is_same_v<T, DyadSpec>) {
          return std::max(s.m, s.n);
        } else {
          return DensityMatrix::validated(s.matrix).support_bound();
        }
      },
      spec);
}

}  // namespace cvmp
