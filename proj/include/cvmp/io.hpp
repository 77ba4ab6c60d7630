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

#include <iosfwd>
#include <string>
#include <string_view>

#include "cvmp/cumulative.hpp"
#include "cvmp/homodyne.hpp"
#include "cvmp/multipoles.hpp"
#include "cvmp/states.hpp"

namespace cvmp {

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// "a+bi", "a-bi", "a", "bi", "-i"; ParseError reports offsets shifted by `base`.
cplx parse_complex(std::string_view s, std::size_t base = 0);

/// Grammar:
///   fock:<n>
///   coherent:<complex>
///   cat:<branches>:<complex>[:<complex>,<complex>,...]
///   dyad:<m>,<n>[,<complex>]
///   file:<path.json>
StateSpec parse_state_spec(std::string_view s);

/// {"cutoff": N, "re": [[...]], "im": [[...]]}; "im" may be omitted.
ExplicitSpec read_state_json(std::istream& in);
ExplicitSpec load_state_json(const std::string& path);
void write_state_json(std::ostream& out, const FockOperator& rho);

/// Header k2,q2,re,im,abs
void write_table_csv(std::ostream& out, const MultipoleTable& t);
MultipoleTable read_table_csv(std::istream& in, Basis basis);

/// Header m2,value
void write_profile_csv(std::ostream& out, const CumulativeProfile& p);

/// Header theta,j,moment
void write_moments_csv(std::ostream& out, const QuadratureMomentSet& m);
QuadratureMomentSet read_moments_csv(std::istream& in);

}  // namespace cvmp
