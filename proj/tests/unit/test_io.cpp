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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "ergocert/errors.hpp"
#include "ergocert/io.hpp"
#include "ergocert/oracle.hpp"
#include "format_check.hpp"
#include "helpers.hpp"

using namespace ergocert;
using testing::near;

TEST_SUITE("io") {
  TEST_CASE("matrix entries in every accepted spelling") {
    const auto m = parse_matrix(
        "# comment line\n"
        "qubits 1\n"
        "0.5 0.25-0.5j   # trailing\n"
        "0.25+0.5j +0.5\n");
    CHECK(m.qubit_count == 1);
    CHECK(m.matrix(0, 1) == cplx(0.25, -0.5));
    CHECK(m.matrix(1, 0) == cplx(0.25, 0.5));
    CHECK(m.matrix(1, 1) == cplx(0.5, 0.0));

    const auto n = parse_matrix("qubits 1\n1e-1+2E-1j 2j\n-j +j\n");
    CHECK(n.matrix(0, 0) == cplx(0.1, 0.2));
    CHECK(n.matrix(0, 1) == cplx(0.0, 2.0));
    CHECK(n.matrix(1, 0) == cplx(0.0, -1.0));
    CHECK(n.matrix(1, 1) == cplx(0.0, 1.0));
    CHECK(parse_matrix("qubits 1\n-1e-3-4j 0\n0 1\n").matrix(0, 0) == cplx(-1e-3, -4.0));
  }

  TEST_CASE("matrix errors carry line numbers") {
    auto message = [](const char* text) {
      try {
        parse_matrix(text);
      } catch (const InputError& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message("") == "matrix file is empty");
    CHECK(message("qubit 1\n").find("line 1") != std::string::npos);
    CHECK(message("qubits 0\n").find("line 1") != std::string::npos);
    CHECK(message("qubits 13\n").find("line 1") != std::string::npos);
    CHECK(message("qubits 1\n1 0\n0 x\n").find("line 3") != std::string::npos);
    CHECK(message("qubits 1\n1 0 0\n").find("line 2") != std::string::npos);
    CHECK(message("qubits 1\n1 0\n0 0\n0 0\n").find("line 4") != std::string::npos);
    CHECK(message("qubits 1\n1 0\n").find("rows") != std::string::npos);
    CHECK(message("qubits 1\n1 0\n0 1+j2\n").find("line 3") != std::string::npos);
    CHECK(message("qubits 1\n1 inf\n0 1\n").find("line 2") != std::string::npos);
  }

  TEST_CASE("format_matrix round trips exactly") {
    std::mt19937_64 rng(12);
    for (int n = 1; n <= 3; ++n) {
      const auto rho = random_density(n, rng);
      const auto back = parse_matrix(format_matrix(rho.matrix()));
      CHECK(back.qubit_count == n);
      CHECK(back.matrix == rho.matrix());
    }
  }

  TEST_CASE("read_matrix_file") {
    const auto path = std::filesystem::temp_directory_path() / "ergocert_io_test.txt";
    {
      std::ofstream out(path);
      out << "qubits 1\n1 0\n0 0\n";
    }
    CHECK(read_matrix_file(path.string()).matrix(0, 0) == cplx(1.0));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_matrix_file(path.string()), InputError);
  }

  TEST_CASE("format_double is shortest round trip") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 3) == "0.3333333333333333");
    CHECK(format_double(1e-20) == "1e-20");
    CHECK(format_double(500.0) == "500");
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
      const double v = u(rng);
      CHECK(std::stod(format_double(v)) == v);
    }
  }

  TEST_CASE("csv quoting and json typing") {
    Table t;
    t.columns = {"name", "value", "count", "empty"};
    t.add_row({std::string("a,b"), 0.5, std::int64_t{3}, std::monostate{}});
    t.add_row({std::string("say \"hi\""), -2.25, std::int64_t{-1}, std::monostate{}});
    CHECK(to_csv(t) == "name,value,count,empty\n\"a,b\",0.5,3,\n\"say \"\"hi\"\"\",-2.25,-1,\n");
    const auto j = nlohmann::json::parse(to_json(t));
    REQUIRE(j.is_array());
    CHECK(j[0]["name"] == "a,b");
    CHECK(j[0]["count"] == 3);
    CHECK(j[1]["value"] == -2.25);
    CHECK(j[0]["empty"].is_null());
    CHECK(testing::csv_json_mismatch(to_csv(t), to_json(t)).empty());
    CHECK_THROWS(t.add_row({0.5}));
  }

  TEST_CASE("single record renders as an object") {
    Table t;
    t.columns = report_columns();
    t.single_record = true;
    CertificationReport r;
    r.delta = 1.5;
    r.verdict_g = Verdict::entangled;
    t.add_row(report_cells(r));
    const auto j = nlohmann::json::parse(to_json(t));
    CHECK(j.is_object());
    CHECK(j["verdict_g"] == "entangled");
    CHECK(j["units"] == "MHz");
    CHECK(testing::csv_json_mismatch(to_csv(t), to_json(t)).empty());
  }

  TEST_CASE("mismatch checker detects differences") {
    CHECK_FALSE(testing::csv_json_mismatch("a,b\n1,2\n", R"([{"a":1,"b":3}])").empty());
    CHECK_FALSE(testing::csv_json_mismatch("a,b\n1,2\n", R"([{"b":2,"a":1}])").empty());
    CHECK_FALSE(testing::csv_json_mismatch("a\nx\n", R"([{"a":"y"}])").empty());
    CHECK(testing::csv_json_mismatch("a,b\n1,x\n", R"([{"a":1.0,"b":"x"}])").empty());
  }

  TEST_CASE("parse_format") {
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("xml"), InputError);
  }
}
