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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cvmp::cli {

struct RunConfig {
  std::string subcommand;
  std::string state = "fock:0";
  int m2 = 4;
  std::optional<int> cutoff;
  std::string basis = "inverse";
  std::string out;
  std::optional<double> tol;
  int threads = 0;
  std::optional<std::uint64_t> seed;
  int top = 8;
  int grid = 41;
  int phases = 0;
  int power = 0;
  double noise = 0.0;
  std::string moments_out;
  std::vector<std::string> suites;
};

/// Resolves `path` against $CVMP_OUTPUT_DIR when it is relative and the variable is set.
std::string resolve_output_path(const std::string& path);

/// Entry point; returns 0 iff every requested check passed, 1 on a failed
/// check and 2 on a usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvmp::cli
