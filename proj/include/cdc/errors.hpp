// Copyright 2026 The cdc Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdc {

/// Parameters violate the preconditions of an operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or construction would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file (CSV, JSON-lines).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on enumerated polynomials and on members of a built code.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Budget from the CDC_BUDGET environment variable, or kDefaultBudget.
std::uint64_t budget_from_env();

}  // namespace cdc
