// Copyright 2026 The ergocert Authors
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

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace testing {

/// Splits CSV text into records, honouring double-quoted fields.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      field += c;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Empty when the CSV and JSON renderings carry the same records with the
/// same values; otherwise a description of the first mismatch.
inline std::string csv_json_mismatch(std::string_view csv, std::string_view json) {
  const auto rows = parse_csv(csv);
  if (rows.empty()) return "csv has no header";
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(json);
  } catch (const std::exception& e) {
    return std::string("json does not parse: ") + e.what();
  }
  if (doc.is_object()) doc = nlohmann::ordered_json::array({doc});
  if (!doc.is_array()) return "json is neither object nor array";
  const auto& header = rows.front();
  if (doc.size() + 1 != rows.size()) {
    return "record count differs: csv " + std::to_string(rows.size() - 1) + ", json " + std::to_string(doc.size());
  }
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const auto& rec = doc[r];
    const auto& cells = rows[r + 1];
    if (rec.size() != header.size() || cells.size() != header.size()) return "width differs in record " + std::to_string(r);
    std::size_t c = 0;
    for (const auto& [key, value] : rec.items()) {
      const std::string where = "record " + std::to_string(r) + " field " + key;
      if (key != header[c]) return where + ": column order differs from '" + header[c] + "'";
      const std::string& text = cells[c];
      if (value.is_null()) {
        if (!text.empty()) return where + ": null in json, '" + text + "' in csv";
      } else if (value.is_string()) {
        if (value.get<std::string>() != text) return where + ": '" + value.get<std::string>() + "' vs '" + text + "'";
      } else if (value.is_number()) {
        double parsed = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), parsed);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return where + ": csv '" + text + "' is not a number";
        if (parsed != value.get<double>()) return where + ": " + value.dump() + " vs " + text;
      } else {
        return where + ": unexpected json type";
      }
      ++c;
    }
  }
  return {};
}

}  // namespace testing
