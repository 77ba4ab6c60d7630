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

#include <map>
#include <string>
#include <string_view>

#include "cvmp/matrix.hpp"
#include "cvmp/states.hpp"
#include "cvmp/tensor_index.hpp"

namespace cvmp {

/// Which expectation a table holds:
///   InverseNormal  <T^inv_Kq>   (state multipoles)
///   DirectNormal   <T_Kq>       (normally ordered moments)
///   InverseWeyl    <T^W,inv_Kq>
///   DirectWeyl     <T^W_Kq>
enum class Basis { InverseNormal, DirectNormal, InverseWeyl, DirectWeyl };

std::string_view to_string(Basis b);
/// Accepts "inverse", "direct", "inverse-weyl", "direct-weyl".
Basis parse_basis(std::string_view s);

struct MultipoleTable {
  Basis basis = Basis::InverseNormal;
  int m2 = 0;
  std::map<TensorIndex, cplx> entries;

  /// Zero for indices absent from the table.
  cplx at(const TensorIndex& idx) const;
  /// max |entry(K,-q) - conj(entry(K,q))|
  double conjugation_defect() const;
};

/// Tr(T^inv_Kq F) as the sum over the single stripe of F the operator couples to.
cplx stripe_trace(const FockOperator& f, const TensorIndex& idx);

/// <T^inv_Kq>, exact for any cutoff.
cplx state_multipole(const DensityMatrix& rho, const TensorIndex& idx);

/// <T_Kq>. Requires support n0 with n0 + 2K <= N, else TruncationError.
cplx inverse_multipole(const DensityMatrix& rho, const TensorIndex& idx);

/// <T^W,inv_Kq> summed over the state's support.
cplx weyl_state_multipole(const DensityMatrix& rho, const TensorIndex& idx);

/// <T^W_Kq>; same truncation rule as inverse_multipole.
cplx weyl_inverse_multipole(const DensityMatrix& rho, const TensorIndex& idx);

cplx multipole(const DensityMatrix& rho, const TensorIndex& idx, Basis basis);

/// All entries with 2K <= m2. The parallel version splits indices over threads.
MultipoleTable multipole_table(const DensityMatrix& rho, int m2, Basis basis);
MultipoleTable multipole_table_serial(const DensityMatrix& rho, int m2, Basis basis);

/// sum <T^inv_Kq> T_Kq restricted to the cutoff (inverse-normal tables only).
FockOperator reconstruct(const MultipoleTable& table, int cutoff);

/// sum_{2K <= m2} <T^inv_Kq><T_Kq>.
double purity_from_multipoles(const DensityMatrix& rho, int m2);

/// Coefficients Tr(T^inv_Kq F) of F in the monomial basis (inverse-normal tag).
MultipoleTable expand_operator(const FockOperator& f, int m2);

}  // namespace cvmp
