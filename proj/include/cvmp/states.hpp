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

#include <span>
#include <variant>
#include <vector>

#include "cvmp/matrix.hpp"

namespace cvmp {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

/// Hermitian, unit-trace, positive semidefinite FockOperator.
class DensityMatrix {
 public:
  /// Checks all three invariants; ValidationError names the one violated.
  static DensityMatrix validated(FockOperator op);
  /// |psi><psi| / <psi|psi>. Throws ValidationError on a zero vector.
  static DensityMatrix from_pure(std::span<const cplx> psi);
  /// sum_i w_i rho_i with w_i >= 0 summing to one; all inputs share a cutoff.
  static DensityMatrix mixture(std::span<const double> weights,
                               std::span<const DensityMatrix> states);

  const FockOperator& op() const noexcept { return op_; }
  int cutoff() const noexcept { return op_.cutoff(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return op_(r, c); }

  /// Largest photon number n with a nonzero entry in row or column n.
  int support_bound() const;
  /// Zero-padded copy at a larger cutoff; cropping below the support throws
  /// TruncationError.
  DensityMatrix embedded(int cutoff) const;
  /// Tr(rho A)
  cplx expectation(const FockOperator& a) const;

 private:
  explicit DensityMatrix(FockOperator op) : op_(std::move(op)) {}
  FockOperator op_;
};

/// Tr(rho^2)
double purity(const DensityMatrix& rho);

struct FockSpec {
  int n = 0;
};
struct CoherentSpec {
  cplx alpha;
};
/// Superposition of `branches` coherent states at alpha e^{2 pi i l / branches}
/// with amplitudes psi_l (all equal when empty).
struct CatSpec {
  int branches = 2;
  cplx alpha;
  std::vector<cplx> amplitudes;
};
/// (|m><m| + |n><n|)/2 + (c |m><n| + c* |n><m|)/2 with |c| <= 1.
struct DyadSpec {
  int m = 0;
  int n = 1;
  cplx mixing = 1.0;
};
struct ExplicitSpec {
  FockOperator matrix;
};

using StateSpec = std::variant<FockSpec, CoherentSpec, CatSpec, DyadSpec, ExplicitSpec>;

/// Builds the state at cutoff N. Coherent and cat branches need truncated norm
/// >= 1 - 1e-8, else TruncationError carrying the required cutoff.
DensityMatrix make_state(const StateSpec& spec, int cutoff);

/// Normalized ket of a cat state at cutoff N (same truncation rule).
std::vector<cplx> cat_ket(const CatSpec& spec, int cutoff);

/// Minimal cutoff at which `make_state` succeeds.
int required_cutoff(const StateSpec& spec);

}  // namespace cvmp
