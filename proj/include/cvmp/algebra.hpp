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

#include <vector>

#include "cvmp/matrix.hpp"
#include "cvmp/tensor_index.hpp"

namespace cvmp {

struct StructureTerm {
  int k2 = 0;
  double coefficient = 0.0;
};

/// T^inv_a T^inv_b = sum_terms f_{K''} T^inv_{K'', q''} with q2'' = q2_a + q2_b.
/// Terms are listed by descending k2''.
struct StructureExpansion {
  int q2 = 0;
  std::vector<StructureTerm> terms;
  bool empty() const noexcept { return terms.empty(); }
};

/// Structure constants by top-down balancing against the exact matrix product.
StructureExpansion product_expansion(const TensorIndex& a, const TensorIndex& b);

/// Sum f T^inv on cutoff N.
FockOperator assemble(const StructureExpansion& e, int cutoff);

/// True when q, q' >= 0 and 2q > K' - q', where the product vanishes identically.
bool product_vanishes_by_rule(const TensorIndex& a, const TensorIndex& b);

/// Closed-form top coefficient f_{K''max}, K''max = min(K+q', K'-q), for
/// q, q' >= 0 outside the vanishing regime.
struct TopCoefficient {
  int k2 = 0;
  double coefficient = 0.0;
};
TopCoefficient structure_top_coefficient(const TensorIndex& a, const TensorIndex& b);

/// One term c * B_{index} of a displacement expansion.
struct DisplacementTerm {
  TensorIndex index{0, 0};
  cplx coefficient;
};

/// D(alpha) T_Kq D(alpha)^dagger as a finite sum over T_{S,l}:
/// C(K+q, S+l) C(K-q, S-l) (-alpha*)^{K+q-S-l} (-alpha)^{K-q-S+l}.
std::vector<DisplacementTerm> displaced_monomial_expansion(cplx alpha, const TensorIndex& idx);

/// D(alpha) T^inv_Kq D(alpha)^dagger as sum over T^inv_{K+S, q+l}, 2S <= s2max:
/// alpha^{S-l} alpha*^{S+l} C(K+S+q+l, K+q) C(K+S-q-l, K-q).
std::vector<DisplacementTerm> displaced_inverse_expansion(cplx alpha, const TensorIndex& idx,
                                                          int s2max);

/// Sum c T_index (monomials) or sum c T^inv_index on cutoff N. Terms whose
/// operator does not fit in the cutoff are restricted to the truncated space.
FockOperator assemble_monomials(const std::vector<DisplacementTerm>& terms, int cutoff);
FockOperator assemble_inverses(const std::vector<DisplacementTerm>& terms, int cutoff);

}  // namespace cvmp
