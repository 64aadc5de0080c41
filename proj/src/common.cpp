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

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cdc/bigint.hpp"
#include "cdc/errors.hpp"

namespace cdc {

std::uint64_t budget_from_env() {
  const char* env = std::getenv("CDC_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw ParameterError("CDC_BUDGET must be a positive integer");
  return v;
}

BigInt parse_decimal_digits(const std::string& text) {
  std::string digits;
  for (char c : text)
    if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
  if (digits.empty()) throw FormatError("no digits in '" + text + "'");
  return BigInt(digits);
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt quot;
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("inexact division " + num.str() + " / " + den.str());
  return quot;
}

}  // namespace cdc
