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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ergocert/certify.hpp"

namespace ergocert {

struct MatrixFile {
  int qubit_count = 0;
  ComplexMatrix matrix;
};

/// Header `qubits N`, then 2^N rows of 2^N entries such as `0.25+0j`,
/// `-1e-3-0.5j`, `0.5` or `0.5j`. Throws InputError with a line number on
/// malformed input; density invariants are not checked here.
MatrixFile parse_matrix(std::string_view text);
MatrixFile read_matrix_file(const std::string& path);
std::string format_matrix(const ComplexMatrix& m);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

/// An empty cell is written as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Emit a JSON object instead of an array; requires exactly one row.
  bool single_record = false;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };
Format parse_format(std::string_view s);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
std::string serialize(const Table& t, Format f);

/// Report fields in their fixed order.
std::vector<std::string> report_columns();
std::vector<Cell> report_cells(const CertificationReport& r);

}  // namespace ergocert
