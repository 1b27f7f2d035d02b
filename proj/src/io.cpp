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

#include "ergocert/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ergocert/errors.hpp"

namespace ergocert {
namespace {

std::string line_error(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool parse_complex(std::string_view tok, cplx& out) {
  if (tok.back() != 'j' && tok.back() != 'J') {
    double re = 0.0;
    if (!parse_real(tok, re)) return false;
    out = re;
    return true;
  }
  const std::string_view body = tok.substr(0, tok.size() - 1);
  // Split at the last sign that is not part of an exponent or the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0, im = 0.0;
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+" || body == "-") {
      im = body == "-" ? -1.0 : 1.0;
    } else if (!parse_real(body, im)) {
      return false;
    }
  } else {
    if (!parse_real(body.substr(0, split), re)) return false;
    const std::string_view imag = body.substr(split);
    if (imag == "+" || imag == "-") im = imag == "-" ? -1.0 : 1.0;
    else if (!parse_real(imag, im)) return false;
  }
  out = cplx(re, im);
  return true;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else return csv_escape(v);
      },
      c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else return v;
      },
      c);
}

}  // namespace

MatrixFile parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  MatrixFile out;
  bool have_header = false;
  std::size_t row = 0, dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "qubits") throw InputError(line_error(line_no, "expected 'qubits N' header"));
      int n = 0;
      const auto res = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), n);
      if (res.ec != std::errc{} || res.ptr != toks[1].data() + toks[1].size() || n < 1 || n > 12) {
        throw InputError(line_error(line_no, "qubit count must be an integer in 1..12"));
      }
      out.qubit_count = n;
      dim = std::size_t{1} << n;
      out.matrix = ComplexMatrix(dim);
      have_header = true;
      continue;
    }
    if (row == dim) throw InputError(line_error(line_no, "more than " + std::to_string(dim) + " rows"));
    if (toks.size() != dim) {
      throw InputError(line_error(line_no, "expected " + std::to_string(dim) + " entries, found " +
                                               std::to_string(toks.size())));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      cplx v;
      if (!parse_complex(toks[j], v)) throw InputError(line_error(line_no, "invalid complex entry '" + toks[j] + "'"));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw InputError(line_error(line_no, "non-finite entry '" + toks[j] + "'"));
      }
      out.matrix(row, j) = v;
    }
    ++row;
  }
  if (!have_header) throw InputError("matrix file is empty");
  if (row != dim) throw InputError("expected " + std::to_string(dim) + " rows, found " + std::to_string(row));
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = "qubits " + std::to_string(qubits_for_dim(m.dim())) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const cplx v = m(i, j);
      if (j) out += ' ';
      out += format_double(v.real());
      const std::string im = format_double(v.imag());
      out += (im.front() == '-' ? "" : "+") + im + "j";
    }
    out += '\n';
  }
  return out;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width does not match columns");
  rows.push_back(std::move(row));
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + std::string(s) + "' (expected csv or json)");
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) out += (c ? "," : "") + csv_escape(t.columns[c]);
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + cell_text(row[c]);
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  auto record = [&](const std::vector<Cell>& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = cell_json(row[c]);
    return obj;
  };
  nlohmann::ordered_json doc;
  if (t.single_record) {
    if (t.rows.size() != 1) throw std::logic_error("single-record table must hold one row");
    doc = record(t.rows.front());
  } else {
    doc = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) doc.push_back(record(row));
  }
  return doc.dump(2) + "\n";
}

std::string serialize(const Table& t, Format f) { return f == Format::csv ? to_csv(t) : to_json(t); }

std::vector<std::string> report_columns() {
  return {"delta",     "bound_gl", "bound_g",          "bound_i",         "verdict_gl",
          "verdict_g", "verdict_i", "units", "ergotropy_global", "ergotropy_local"};
}

std::vector<Cell> report_cells(const CertificationReport& r) {
  return {r.delta,
          r.bound_gl,
          r.bound_g,
          r.bound_i,
          std::string(to_string(r.verdict_gl)),
          std::string(to_string(r.verdict_g)),
          std::string(to_string(r.verdict_i)),
          r.units,
          r.ergotropy_global,
          r.ergotropy_local};
}

}  // namespace ergocert
