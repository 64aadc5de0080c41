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

#include <span>
#include <string>

#include "cdc/errors.hpp"

namespace cdc {

/// One published row: A_q(n,d,k) with its new lower bound and, when listed,
/// the previous best value. Values are plain decimal strings.
struct GoldenRow {
  unsigned q;
  unsigned n;
  unsigned d;
  unsigned k;
  const char* value;
  const char* old_value;  // empty when not listed
};

/// Reference rows for tables 1 to 5 in published order.
std::span<const GoldenRow> golden_table(int id);

}  // namespace cdc
