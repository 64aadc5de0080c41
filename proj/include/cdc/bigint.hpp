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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

/// Plain decimal, no separators.
inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses a decimal string after dropping every non-digit character, so
/// table cells with stray spaces or line breaks compare correctly.
BigInt parse_decimal_digits(const std::string& text);

/// Exact quotient; throws std::logic_error when den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den);

}  // namespace cdc
