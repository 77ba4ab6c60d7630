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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cvmp {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// Single-mode operators on the truncated Fock space {|0>, ..., |N>} are
/// matrices of dimension N+1 whose row/column index is the photon number;
/// `FockOperator` names that use. Two-mode operators reuse the same storage
/// with joint index n1 * (N+1) + n2.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<cplx> row_major);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  /// Fock cutoff N = dim - 1 for single-mode use.
  int cutoff() const noexcept { return static_cast<int>(dim_) - 1; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

  std::span<cplx> row(std::size_t r) noexcept { return {data_.data() + r * dim_, dim_}; }
  std::span<const cplx> row(std::size_t r) const noexcept { return {data_.data() + r * dim_, dim_}; }
  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> data() noexcept { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  double max_abs() const;
  /// max |A_rc - conj(A_cr)|
  double hermiticity_defect() const;
  bool all_finite() const;
  /// Zero-padded (or cropped) copy of dimension `dim`.
  Matrix resized(std::size_t dim) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

using FockOperator = Matrix;

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, cplx s);
Matrix operator*(cplx s, Matrix a);
/// Matrix product (parallel kernel).
Matrix operator*(const Matrix& a, const Matrix& b);

/// max |a_rc - b_rc|; throws ValidationError on dimension mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// A |v>
std::vector<cplx> apply(const Matrix& a, std::span<const cplx> v);
/// <u|v>
cplx inner(std::span<const cplx> u, std::span<const cplx> v);
/// <v|A|v>
cplx expectation(const Matrix& a, std::span<const cplx> v);

}  // namespace cvmp
