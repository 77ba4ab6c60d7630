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

#include "cvmp/sweeps.hpp"

#include <cmath>

#include "cvmp/cumulative.hpp"
#include "cvmp/errors.hpp"
#include "cvmp/fock.hpp"

namespace cvmp {
namespace {

constexpr double kEnergyTol = 1e-12;
constexpr double kViolationTol = 1e-9;

double ket_energy(const std::vector<cplx>& psi) {
  double e = 0.0;
  double norm = 0.0;
  for (std::size_t n = 0; n < psi.size(); ++n) {
    e += n * std::norm(psi[n]);
    norm += std::norm(psi[n]);
  }
  return e / norm;
}

std::vector<cplx> padded(std::vector<cplx> psi, int cutoff) {
  psi.resize(static_cast<std::size_t>(cutoff) + 1);
  return psi;
}

struct Trial {
  bool ok = false;
  double value = 0.0;
  std::string label;
};

// Cat with `branches` branches and random amplitudes at radius r, energy nbar.
Trial cat_trial(std::mt19937_64& rng, int branches, double nbar, int m2) {
  std::normal_distribution<double> g;
  CatSpec spec;
  spec.branches = branches;
  for (int l = 0; l < branches; ++l) spec.amplitudes.emplace_back(g(rng), g(rng));
  const double r_max = 3.0 * std::sqrt(nbar) + 3.0;
  const int cutoff = coherent_required_cutoff(r_max, 1e-10);
  auto energy = [&](double r) {
    spec.alpha = r;
    return ket_energy(cat_ket(spec, cutoff)) - nbar;
  };
  // First bracket of a root on a coarse grid, then bisection.
  constexpr int kGrid = 120;
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = energy(1e-3);
  bool found = false;
  for (int k = 1; k <= kGrid && !found; ++k) {
    const double a = 1e-3 + (r_max - 1e-3) * (k - 1) / kGrid;
    const double b = 1e-3 + (r_max - 1e-3) * k / kGrid;
    const double f_b = energy(b);
    if ((f_lo <= 0.0) != (f_b <= 0.0)) {
      lo = a;
      hi = b;
      found = true;
    }
    f_lo = f_b;
  }
  if (!found) return {};
  double f_a = energy(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_m = energy(mid);
    if ((f_m <= 0.0) == (f_a <= 0.0)) {
      lo = mid;
      f_a = f_m;
    } else {
      hi = mid;
    }
  }
  spec.alpha = 0.5 * (lo + hi);
  const auto psi = cat_ket(spec, cutoff);
  if (std::abs(ket_energy(psi) - nbar) > 1e-9) return {};
  const auto rho = DensityMatrix::from_pure(padded(psi, cutoff + m2));
  return {true, cumulative_direct(rho, m2).final_value(),
          "cat:" + std::to_string(branches) + ":" + std::to_string(spec.alpha.real())};
}

Trial pure_trial(std::mt19937_64& rng, double nbar, int m2) {
  const int nmax = static_cast<int>(std::ceil(nbar)) + 2;
  auto psi = tilt_to_energy(random_ket(rng, nmax), nbar);
  if (!psi) return {};
  const auto rho = DensityMatrix::from_pure(padded(*psi, nmax + m2));
  return {true, cumulative_direct(rho, m2).final_value(), "pure(n<=" + std::to_string(nmax) + ")"};
}

MaximizerReport maximizer_impl(int m2, double nbar, long trials, std::uint64_t seed,
                               bool parallel) {
  if (!(nbar > 0.0)) throw DomainError("direct_maximizer_check requires nbar > 0");
  std::vector<Trial> results(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    results[t] = (t % 2 == 0) ? pure_trial(rng, nbar, m2)
                              : cat_trial(rng, 2 + static_cast<int>((t / 2) % 3), nbar, m2);
  }
  MaximizerReport rep;
  rep.m2 = m2;
  rep.nbar = nbar;
  rep.trials = trials;
  rep.coherent_value = coherent_direct_closed(nbar, m2);
  const cplx alpha = std::sqrt(nbar);
  const int cutoff = coherent_required_cutoff(alpha, 1e-14);
  rep.coherent_numeric =
      cumulative_direct(make_state(CoherentSpec{alpha}, cutoff).embedded(cutoff + m2), m2)
          .final_value();
  rep.min_trial_value = INFINITY;
  rep.max_trial_value = -INFINITY;
  for (const auto& r : results) {
    if (!r.ok) {
      ++rep.skipped;
      continue;
    }
    if (r.value > rep.max_trial_value) {
      rep.max_trial_value = r.value;
      rep.max_trial_label = r.label;
    }
    rep.min_trial_value = std::min(rep.min_trial_value, r.value);
    if (r.value > rep.coherent_value + kViolationTol * std::max(1.0, rep.coherent_value))
      ++rep.violations;
  }
  rep.min_margin = rep.coherent_value - rep.max_trial_value;
  rep.minimizer_value = direct_minimizer(nbar, m2).value;
  rep.minimizer_below_all = rep.minimizer_value <= rep.min_trial_value + 1e-12;
  return rep;
}

VacuumSweepReport vacuum_impl(int m2, long trials, std::uint64_t seed, int nmax, bool parallel) {
  std::vector<double> values(static_cast<std::size_t>(trials));
  std::vector<std::vector<cplx>> kets(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(static) if (parallel)
  for (long t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    kets[t] = random_ket(rng, nmax);
    values[t] = cumulative_inverse(DensityMatrix::from_pure(kets[t]), m2).final_value();
  }
  VacuumSweepReport rep;
  rep.m2 = m2;
  rep.trials = trials;
  rep.vacuum_value = vacuum_cumulative_closed(m2);
  rep.max_trial_value = -INFINITY;
  for (long t = 0; t < trials; ++t) {
    if (values[t] > rep.max_trial_value) {
      rep.max_trial_value = values[t];
      rep.best_ket = kets[t];
    }
    if (values[t] > rep.vacuum_value + kViolationTol) ++rep.violations;
  }
  return rep;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::vector<cplx> random_ket(std::mt19937_64& rng, int nmax) {
  std::normal_distribution<double> g;
  std::vector<cplx> psi(static_cast<std::size_t>(nmax) + 1);
  double norm = 0.0;
  for (auto& c : psi) {
    c = cplx(g(rng), g(rng));
    norm += std::norm(c);
  }
  for (auto& c : psi) c /= std::sqrt(norm);
  return psi;
}

DensityMatrix random_mixed_state(std::mt19937_64& rng, int nmax, int cutoff) {
  if (nmax > cutoff) throw TruncationError("random state support exceeds cutoff", nmax);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(nmax) + 1);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  for (auto& x : w) x /= total;
  FockOperator op(static_cast<std::size_t>(cutoff) + 1);
  for (const double wk : w) {
    const auto psi = random_ket(rng, nmax);
    for (int r = 0; r <= nmax; ++r)
      for (int c = 0; c <= nmax; ++c) op(r, c) += wk * psi[r] * std::conj(psi[c]);
  }
  // Renormalize the trace exactly and symmetrize.
  const double tr = op.trace().real();
  for (auto& v : op.data()) v /= tr;
  for (int r = 0; r <= cutoff; ++r) {
    op(r, r) = op(r, r).real();
    for (int c = r + 1; c <= cutoff; ++c) op(c, r) = std::conj(op(r, c));
  }
  return DensityMatrix::validated(std::move(op));
}

std::optional<std::vector<cplx>> tilt_to_energy(std::vector<cplx> amp, double nbar) {
  auto weighted = [&](double beta) {
    std::vector<cplx> psi(amp.size());
    // Center the exponent at the midpoint level to avoid overflow.
    const double mid = 0.5 * static_cast<double>(amp.size() - 1);
    for (std::size_t n = 0; n < amp.size(); ++n) psi[n] = amp[n] * std::exp(0.5 * beta * (n - mid));
    double norm = 0.0;
    for (const auto& c : psi) norm += std::norm(c);
    for (auto& c : psi) c /= std::sqrt(norm);
    return psi;
  };
  double lo = -200.0;
  double hi = 200.0;
  if (ket_energy(weighted(lo)) > nbar || ket_energy(weighted(hi)) < nbar) return std::nullopt;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ket_energy(weighted(mid)) < nbar) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  auto psi = weighted(0.5 * (lo + hi));
  if (std::abs(ket_energy(psi) - nbar) > kEnergyTol * std::max(1.0, nbar)) return std::nullopt;
  return psi;
}

VacuumSweepReport vacuum_dominance_sweep(int m2, long trials, std::uint64_t seed, int nmax) {
  return vacuum_impl(m2, trials, seed, nmax, true);
}

VacuumSweepReport vacuum_dominance_sweep_serial(int m2, long trials, std::uint64_t seed, int nmax) {
  return vacuum_impl(m2, trials, seed, nmax, false);
}

MaximizerReport direct_maximizer_check(int m2, double nbar, long trials, std::uint64_t seed) {
  return maximizer_impl(m2, nbar, trials, seed, true);
}

MaximizerReport direct_maximizer_check_serial(int m2, double nbar, long trials,
                                              std::uint64_t seed) {
  return maximizer_impl(m2, nbar, trials, seed, false);
}

}  // namespace cvmp
