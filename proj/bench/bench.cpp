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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "cvmp/jacobi.hpp"
#include "cvmp/kernels.hpp"
#include "cvmp/multipoles.hpp"
#include "cvmp/qutrit.hpp"
#include "cvmp/states.hpp"
#include "cvmp/sweeps.hpp"
#include "cvmp/tensor_basis.hpp"

namespace {

using namespace cvmp;

Matrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix a(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) {
      const cplx v(g(rng), r == c ? 0.0 : g(rng));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  return a;
}

void BM_MatmulSerial(benchmark::State& st) {
  const auto a = random_hermitian(static_cast<std::size_t>(st.range(0)), 1);
  const auto b = random_hermitian(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}
void BM_MatmulParallel(benchmark::State& st) {
  const auto a = random_hermitian(static_cast<std::size_t>(st.range(0)), 1);
  const auto b = random_hermitian(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::matmul(a, b));
}
BENCHMARK(BM_MatmulSerial)->Arg(64)->Arg(225);
BENCHMARK(BM_MatmulParallel)->Arg(64)->Arg(225);

void BM_JacobiSerial(benchmark::State& st) {
  const auto a = random_hermitian(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_eigensolve_serial(a));
}
void BM_JacobiParallel(benchmark::State& st) {
  const auto a = random_hermitian(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(hermitian_eigensolve(a));
}
BENCHMARK(BM_JacobiSerial)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_MultipoleTableSerial(benchmark::State& st) {
  const auto rho = make_state(CoherentSpec{cplx(1.2, 0.5)}, 40);
  for (auto _ : st) benchmark::DoNotOptimize(multipole_table_serial(rho, static_cast<int>(st.range(0)), Basis::InverseNormal));
}
void BM_MultipoleTableParallel(benchmark::State& st) {
  const auto rho = make_state(CoherentSpec{cplx(1.2, 0.5)}, 40);
  for (auto _ : st) benchmark::DoNotOptimize(multipole_table(rho, static_cast<int>(st.range(0)), Basis::InverseNormal));
}
BENCHMARK(BM_MultipoleTableSerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultipoleTableParallel)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_OrthonormalitySerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_orthonormality_serial(8, 20));
}
void BM_OrthonormalityParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_orthonormality(8, 20));
}
BENCHMARK(BM_OrthonormalitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrthonormalityParallel)->Unit(benchmark::kMillisecond);

void BM_QutritScanSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(scan_qutrit_serial(14, 41));
}
void BM_QutritScanParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(scan_qutrit(14, 41));
}
BENCHMARK(BM_QutritScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QutritScanParallel)->Unit(benchmark::kMillisecond);

void BM_VacuumSweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(vacuum_dominance_sweep_serial(10, 1000, 7));
}
void BM_VacuumSweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(vacuum_dominance_sweep(10, 1000, 7));
}
BENCHMARK(BM_VacuumSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VacuumSweepParallel)->Unit(benchmark::kMillisecond);

void BM_MaximizerSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(direct_maximizer_check_serial(4, 1.0, 200, 7));
}
void BM_MaximizerParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(direct_maximizer_check(4, 1.0, 200, 7));
}
BENCHMARK(BM_MaximizerSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximizerParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
