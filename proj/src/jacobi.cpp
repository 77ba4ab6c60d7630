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

#include "cvmp/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cvmp/errors.hpp"

namespace cvmp {
namespace {

constexpr long kParallelMinDim = 64;

struct Rotation {
  std::size_t p = 0;
  std::size_t q = 0;
  double c = 1.0;
  double s = 0.0;
  cplx e = 1.0;  // phase of a_pq
  double t = 0.0;
  double g = 0.0;  // |a_pq|
  bool active = false;
};

// U acts on columns p,q:  U_pp = c, U_pq = s, U_qp = -s conj(e), U_qq = c conj(e).
// Then (U^dagger A U)_pq = 0 and the diagonal moves by -/+ t |a_pq|.
Rotation make_rotation(const Matrix& a, std::size_t p, std::size_t q) {
  Rotation r;
  r.p = p;
  r.q = q;
  const cplx apq = a(p, q);
  r.g = std::abs(apq);
  if (r.g == 0.0) return r;
  r.active = true;
  r.e = apq / r.g;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r.g);
  r.t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  r.c = 1.0 / std::sqrt(1.0 + r.t * r.t);
  r.s = r.t * r.c;
  return r;
}

inline void rotate_columns(Matrix& m, std::size_t row, const Rotation& r) {
  const cplx xp = m(row, r.p);
  const cplx xq = m(row, r.q);
  const cplx ce = std::conj(r.e);
  m(row, r.p) = r.c * xp - r.s * ce * xq;
  m(row, r.q) = r.s * xp + r.c * ce * xq;
}

inline void rotate_rows(Matrix& m, std::size_t col, const Rotation& r) {
  const cplx xp = m(r.p, col);
  const cplx xq = m(r.q, col);
  m(r.p, col) = r.c * xp - r.s * r.e * xq;
  m(r.q, col) = r.s * xp + r.c * r.e * xq;
}

inline void finish_pivot(Matrix& a, const Rotation& r, double app, double aqq) {
  a(r.p, r.p) = app - r.t * r.g;
  a(r.q, r.q) = aqq + r.t * r.g;
  a(r.p, r.q) = 0.0;
  a(r.q, r.p) = 0.0;
}

double off_norm_sq(const Matrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return s;
}

double frob_sq(const Matrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return s;
}

Matrix checked_copy(const Matrix& a, const JacobiOptions& opts) {
  const double scale = std::max(1.0, a.max_abs());
  const double defect = a.hermiticity_defect();
  if (defect > opts.hermitian_tol * scale)
    throw ValidationError("hermitian_eigensolve: input not Hermitian (defect " +
                          std::to_string(defect) + ")");
  if (!a.all_finite()) throw ValidationError("hermitian_eigensolve: non-finite entries");
  // Symmetrize so the rotations see an exactly Hermitian matrix.
  Matrix w(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    w(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < a.dim(); ++c) {
      w(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
      w(c, r) = std::conj(w(r, c));
    }
  }
  return w;
}

EigenDecomposition finalize(const Matrix& a, const Matrix& v, int sweeps) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  EigenDecomposition out;
  out.dim = n;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

// Circle-method schedule: m-1 rounds of m/2 disjoint pairs over m = n rounded
// up to even; pairs touching the padding index are dropped.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tournament(std::size_t n) {
  const std::size_t m = n + (n % 2);
  std::vector<std::size_t> ring(m);
  std::iota(ring.begin(), ring.end(), 0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  for (std::size_t round = 0; round + 1 < m; ++round) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < m / 2; ++k) {
      std::size_t i = ring[k];
      std::size_t j = ring[m - 1 - k];
      if (i >= n || j >= n) continue;
      if (i > j) std::swap(i, j);
      pairs.emplace_back(i, j);
    }
    rounds.push_back(std::move(pairs));
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return rounds;
}

}  // namespace

std::vector<cplx> EigenDecomposition::vector(std::size_t i) const {
  std::vector<cplx> v(dim);
  for (std::size_t r = 0; r < dim; ++r) v[r] = vectors(r, i);
  return v;
}

EigenDecomposition hermitian_eigensolve(const Matrix& input, const JacobiOptions& opts) {
  Matrix a = checked_copy(input, opts);
  const std::size_t n = a.dim();
  Matrix v = Matrix::identity(n);
  const double target = opts.convergence_tol * opts.convergence_tol * frob_sq(a);
  const auto rounds = tournament(n);
  const long ln = static_cast<long>(n);
  int sweep = 0;
  std::vector<Rotation> rots;
  std::vector<std::pair<double, double>> diag;
  while (sweep < opts.max_sweeps && off_norm_sq(a) > target) {
    ++sweep;
    for (const auto& pairs : rounds) {
      rots.clear();
      diag.clear();
      for (const auto& [p, q] : pairs) {
        auto r = make_rotation(a, p, q);
        if (!r.active) continue;
        diag.emplace_back(a(p, p).real(), a(q, q).real());
        rots.push_back(r);
      }
      if (rots.empty()) continue;
      const long nr = static_cast<long>(rots.size());
#pragma omp parallel if (ln >= kParallelMinDim)
      {
#pragma omp for schedule(static)
        for (long row = 0; row < ln; ++row) {
          for (const auto& r : rots) {
            rotate_columns(a, static_cast<std::size_t>(row), r);
            rotate_columns(v, static_cast<std::size_t>(row), r);
          }
        }
#pragma omp for schedule(static)
        for (long k = 0; k < nr; ++k)
          for (std::size_t col = 0; col < n; ++col) rotate_rows(a, col, rots[k]);
      }
      for (std::size_t k = 0; k < rots.size(); ++k)
        finish_pivot(a, rots[k], diag[k].first, diag[k].second);
    }
  }
  return finalize(a, v, sweep);
}

EigenDecomposition hermitian_eigensolve_serial(const Matrix& input, const JacobiOptions& opts) {
  Matrix a = checked_copy(input, opts);
  const std::size_t n = a.dim();
  Matrix v = Matrix::identity(n);
  const double target = opts.convergence_tol * opts.convergence_tol * frob_sq(a);
  int sweep = 0;
  while (sweep < opts.max_sweeps && off_norm_sq(a) > target) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const auto r = make_rotation(a, p, q);
        if (!r.active) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        for (std::size_t row = 0; row < n; ++row) {
          rotate_columns(a, row, r);
          rotate_columns(v, row, r);
        }
        for (std::size_t col = 0; col < n; ++col) rotate_rows(a, col, r);
        finish_pivot(a, r, app, aqq);
      }
    }
  }
  return finalize(a, v, sweep);
}

}  // namespace cvmp
