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

#include <compare>
#include <string>
#include <vector>

namespace cvmp {

/// Tensor order K and component q stored doubled, k2 = 2K and q2 = 2q, so
/// half-integer orders need no floating-point index arithmetic.
class TensorIndex {
 public:
  /// Throws DomainError unless |q2| <= k2 and k2 = q2 (mod 2).
  TensorIndex(int k2, int q2);

  /// From half-integer values; throws DomainError if K, q are not multiples of 1/2.
  static TensorIndex from_half_integers(double K, double q);

  int k2() const noexcept { return k2_; }
  int q2() const noexcept { return q2_; }
  double K() const noexcept { return 0.5 * k2_; }
  double q() const noexcept { return 0.5 * q2_; }
  /// K + q: number of creation operators in the monomial.
  int kpq() const noexcept { return (k2_ + q2_) / 2; }
  /// K - q: number of annihilation operators in the monomial.
  int kmq() const noexcept { return (k2_ - q2_) / 2; }
  int abs_q2() const noexcept { return q2_ < 0 ? -q2_ : q2_; }
  /// K + |q|
  int reach() const noexcept { return (k2_ + abs_q2()) / 2; }
  TensorIndex conjugate() const { return TensorIndex(k2_, -q2_); }

  /// "K=3/2,q=-1/2"
  std::string to_string() const;

  friend auto operator<=>(const TensorIndex&, const TensorIndex&) = default;

 private:
  int k2_;
  int q2_;
};

/// All indices with k2 <= m2, ordered by k2 then q2 ascending.
std::vector<TensorIndex> indices_up_to(int m2);
/// The 2K+1 components of one order.
std::vector<TensorIndex> indices_at(int k2);

}  // namespace cvmp
