// Copyright 2026 The galpts Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace galpts {

/// Invalid user-supplied parameters (field, curve, point, gamma).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violated precondition of an algebraic operation (division by zero,
/// mixing contexts, unreduced input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation could not be decided within the allowed field extensions.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or time budget would be (or was) exceeded.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, unsigned long long estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  unsigned long long estimate() const { return estimate_; }

 private:
  unsigned long long estimate_;
};

}  // namespace galpts
