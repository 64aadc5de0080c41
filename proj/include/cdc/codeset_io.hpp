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

// JSON-lines code files. Line 1 is a header object
//   {q, p, m, moduli, N, k, claimed_distance, provenance, count}
// and every further line is one member: its RREF basis as an array of rows of
// integer-encoded field elements.

#include <iosfwd>
#include <string>
#include <vector>

#include "cdc/construct.hpp"
#include "cdc/verify.hpp"

namespace cdc {

void write_codeset(std::ostream& out, const CodeSet& code);
void write_codeset(const std::string& path, const CodeSet& code);

struct LoadedCodeSet {
  CodeSet code;
  /// File-level checks: header count against body lines and canonical form
  /// of every member line.
  std::vector<CheckResult> file_checks;
};

/// Throws FormatError on malformed JSON, missing fields, out-of-range
/// entries, ragged rows or an unsupported field modulus.
LoadedCodeSet read_codeset(std::istream& in);
LoadedCodeSet read_codeset(const std::string& path);

}  // namespace cdc
