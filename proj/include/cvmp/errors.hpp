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

#include <stdexcept>
#include <string>

namespace cvmp {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would need Fock levels beyond the available cutoff.
/// `required_cutoff()` is the smallest cutoff that makes the request exact
/// (or -1 when no finite cutoff can).
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_cutoff)
      : std::runtime_error(what), required_cutoff_(required_cutoff) {}
  int required_cutoff() const noexcept { return required_cutoff_; }

 private:
  int required_cutoff_;
};

/// Input violates a structural invariant (Hermiticity, trace, positivity, shape).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank-deficient or badly conditioned linear problem.
class ConditioningError : public std::runtime_error {
 public:
  ConditioningError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// Malformed textual input; `position()` is the 0-based offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cvmp
