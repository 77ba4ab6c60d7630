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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cvmp/states.hpp"

// Randomized extremality sweeps. Trial t draws from an RNG seeded by
// (seed, t), so results do not depend on the thread count.
namespace cvmp {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Haar-like random pure ket on levels 0..nmax (normalized complex Gaussian).
std::vector<cplx> random_ket(std::mt19937_64& rng, int nmax);

/// Random mixed state of rank <= nmax+1 on levels 0..nmax.
DensityMatrix random_mixed_state(std::mt19937_64& rng, int nmax, int cutoff);

struct VacuumSweepReport {
  int m2 = 0;
  long trials = 0;
  double vacuum_value = 0.0;
  double max_trial_value = 0.0;
  long violations = 0;
  std::vector<cplx> best_ket;
};

/// Random pure states on n <= nmax compared against the vacuum's inverse cumulative sum.
VacuumSweepReport vacuum_dominance_sweep(int m2, long trials, std::uint64_t seed, int nmax = 2);
VacuumSweepReport vacuum_dominance_sweep_serial(int m2, long trials, std::uint64_t seed,
                                                int nmax = 2);

struct MaximizerReport {
  int m2 = 0;
  double nbar = 0.0;
  double coherent_value = 0.0;    // closed form
  double coherent_numeric = 0.0;  // from the truncated coherent state
  long trials = 0;
  long skipped = 0;
  double max_trial_value = 0.0;
  std::string max_trial_label;
  double min_trial_value = 0.0;
  /// coherent_value - max_trial_value
  double min_margin = 0.0;
  long violations = 0;
  double minimizer_value = 0.0;
  bool minimizer_below_all = false;
};

/// Same-energy trial states: even trials are random pure kets on
/// n <= ceil(nbar)+2 tilted to energy nbar, odd trials are 2-, 3- or 4-branch
/// cats with random branch amplitudes and |alpha| fixed by bisection.
MaximizerReport direct_maximizer_check(int m2, double nbar, long trials, std::uint64_t seed);
MaximizerReport direct_maximizer_check_serial(int m2, double nbar, long trials,
                                              std::uint64_t seed);

/// Pure ket from random amplitudes reweighted by e^{beta n / 2} so that
/// <n> = nbar; nullopt if no beta in range reaches it.
std::optional<std::vector<cplx>> tilt_to_energy(std::vector<cplx> amplitudes, double nbar);

}  // namespace cvmp
