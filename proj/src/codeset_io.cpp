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

#include "cdc/codeset_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace cdc {

namespace {

nlohmann::json field_descriptor(const FieldSpec& f) {
  return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

template <class T>
T get_field(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) throw FormatError(std::string("header is missing '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("header field '") + key + "': " + e.what());
  }
}

}  // namespace

void write_codeset(std::ostream& out, const CodeSet& code) {
  const auto& f = code.field();
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : code.provenance().params) params[key] = value;
  const nlohmann::json header = {
      {"q", f.q()},
      {"p", f.p()},
      {"m", f.m()},
      {"moduli", {field_descriptor(f)}},
      {"N", code.ambient_dim()},
      {"k", code.k()},
      {"claimed_distance", code.claimed_distance()},
      {"provenance", {{"construction", code.provenance().construction}, {"params", params}}},
      {"count", code.size()},
  };
  out << header.dump() << '\n';
  for (const auto& s : code.members()) out << subspace_to_json(s).dump() << '\n';
}

void write_codeset(const std::string& path, const CodeSet& code) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_codeset(out, code);
  if (!out) throw FormatError("write failed for " + path);
}

LoadedCodeSet read_codeset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty code file");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("header: ") + e.what());
  }
  if (!header.is_object()) throw FormatError("header must be a JSON object");

  const auto p = get_field<unsigned>(header, "p");
  const auto m = get_field<unsigned>(header, "m");
  const auto q = get_field<unsigned>(header, "q");
  const FieldSpec* field = nullptr;
  try {
    field = &make_field(p, m);
  } catch (const ParameterError& e) {
    throw FormatError(std::string("header field: ") + e.what());
  }
  if (field->q() != q) throw FormatError("header q does not equal p^m");
  const auto moduli = get_field<nlohmann::json>(header, "moduli");
  if (!moduli.is_array() || moduli.empty() || moduli.front() != field_descriptor(*field)) {
    throw FormatError("unsupported field modulus; expected " + field_descriptor(*field).dump());
  }
  const auto ambient = get_field<std::size_t>(header, "N");
  const auto k = get_field<std::size_t>(header, "k");
  const auto claimed = get_field<std::size_t>(header, "claimed_distance");
  const auto count = get_field<std::size_t>(header, "count");
  const auto prov_json = get_field<nlohmann::json>(header, "provenance");
  Provenance prov;
  try {
    prov.construction = prov_json.at("construction").get<std::string>();
    for (const auto& [key, value] : prov_json.at("params").items()) prov.params[key] = value.get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("provenance: ") + e.what());
  }

  std::vector<Subspace> members;
  std::size_t lines = 0;
  std::size_t non_canonical = 0;
  nlohmann::json first_non_canonical;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lines;
    nlohmann::json rows;
    try {
      rows = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("member line " + std::to_string(lines) + ": " + e.what());
    }
    if (!rows.is_array()) throw FormatError("member line " + std::to_string(lines) + " is not an array");
    Matrix mat(*field, rows.size(), ambient);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != ambient) {
        throw FormatError("member line " + std::to_string(lines) + ": row " + std::to_string(r) + " must have " +
                          std::to_string(ambient) + " entries");
      }
      for (std::size_t c = 0; c < ambient; ++c) {
        const auto& v = rows[r][c];
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= q) {
          throw FormatError("member line " + std::to_string(lines) + ": entry out of range");
        }
        mat(r, c) = v.get<Elem>();
      }
    }
    Subspace s = subspace_from_rows(mat);
    if (!(s.basis() == mat)) {
      if (non_canonical++ == 0) first_non_canonical = {{"line", lines + 1}, {"rows", rows}};
    }
    members.push_back(std::move(s));
  }

  std::vector<CheckResult> checks;
  checks.push_back({"file_count", lines == count, count, lines, nullptr});
  checks.push_back({"canonical_form", non_canonical == 0, 0, non_canonical, first_non_canonical});
  return {CodeSet(*field, ambient, k, claimed, std::move(members), std::move(prov)), std::move(checks)};
}

LoadedCodeSet read_codeset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_codeset(in);
}

}  // namespace cdc
