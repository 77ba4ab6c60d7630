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

#include "cvmp/tensor_index.hpp"

#include <cmath>

#include "cvmp/errors.hpp"

namespace cvmp {
namespace {

std::string half(int v2) {
  if (v2 % 2 == 0) return std::to_string(v2 / 2);
  return std::to_string(v2) + "/2";
}

}  // namespace

TensorIndex::TensorIndex(int k2, int q2) : k2_(k2), q2_(q2) {
  if (k2 < 0 || q2 > k2 || q2 < -k2 || (k2 - q2) % 2 != 0)
    throw DomainError("invalid tensor index (k2=" + std::to_string(k2) +
                      ", q2=" + std::to_string(q2) + ")");
}

TensorIndex TensorIndex::from_half_integers(double K, double q) {
  const double k2 = 2.0 * K;
  const double q2 = 2.0 * q;
  if (k2 != std::round(k2) || q2 != std::round(q2))
    throw DomainError("tensor index components must be multiples of 1/2");
  return TensorIndex(static_cast<int>(k2), static_cast<int>(q2));
}

std::string TensorIndex::to_string() const { return "K=" + half(k2_) + ",q=" + half(q2_); }

std::vector<TensorIndex> indices_at(int k2) {
  std::vector<TensorIndex> out;
  for (int q2 = -k2; q2 <= k2; q2 += 2) out.emplace_back(k2, q2);
  return out;
}

std::vector<TensorIndex> indices_up_to(int m2) {
  std::vector<TensorIndex> out;
  for (int k2 = 0; k2 <= m2; ++k2)
    for (int q2 = -k2; q2 <= k2; q2 += 2) out.emplace_back(k2, q2);
  return out;
}

}  // namespace cvmp
