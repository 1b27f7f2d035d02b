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
#include <numbers>

#include "ergocert/certify.hpp"
#include "ergocert/circuit.hpp"
#include "ergocert/errors.hpp"
#include "ergocert/oracle.hpp"
#include "helpers.hpp"

using namespace ergocert;
using testing::near;

namespace {

constexpr double pi = std::numbers::pi;

ComplexMatrix embed(const ComplexMatrix& u, int q, int n) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int k = 1; k <= n; ++k) out = kron(out, k == q ? u : ComplexMatrix::identity(2));
  return out;
}

ComplexMatrix dense_cnot(int c, int t, int n) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i) u((i & qubit_mask(c, n)) ? i ^ qubit_mask(t, n) : i, i) = 1.0;
  return u;
}

ComplexMatrix rx(double a) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  return ComplexMatrix::from_rows({{c, cplx(0, -s)}, {cplx(0, -s), c}});
}
ComplexMatrix ry(double a) {
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}
ComplexMatrix rz(double a) {
  return ComplexMatrix::from_rows({{std::polar(1.0, -a / 2), 0.0}, {0.0, std::polar(1.0, a / 2)}});
}
ComplexMatrix hadamard() {
  const double r = std::numbers::sqrt2 / 2;
  return ComplexMatrix::from_rows({{r, r}, {r, -r}});
}

}  // namespace

TEST_SUITE("circuit") {
  TEST_CASE("gates agree with dense unitaries") {
    std::mt19937_64 rng(3);
    const int n = 3;
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_density(n, rng);
      GateProgram p(n);
      p.rotate(Axis::x, 0.3 + trial, {1}).rotate(Axis::y, 1.1, {2, 3}).rotate(Axis::z, -0.7, {3});
      p.h(2).cnot(3, 1).cnot(1, 2);
      ComplexMatrix want = rho.matrix();
      want = apply_unitary(want, embed(rx(0.3 + trial), 1, n));
      want = apply_unitary(want, embed(ry(1.1), 2, n));
      want = apply_unitary(want, embed(ry(1.1), 3, n));
      want = apply_unitary(want, embed(rz(-0.7), 3, n));
      want = apply_unitary(want, embed(hadamard(), 2, n));
      want = apply_unitary(want, dense_cnot(3, 1, n));
      want = apply_unitary(want, dense_cnot(1, 2, n));
      CHECK(near(run(p, rho).final.matrix(), want, 1e-12));
    }
  }

  TEST_CASE("crusher removes coherences only") {
    std::mt19937_64 rng(4);
    const auto rho = random_density(2, rng);
    GateProgram p(2);
    const auto out = run(p.crush(), rho).final.matrix();
    CHECK(out.is_diagonal());
    CHECK(out.real_diagonal() == rho.matrix().real_diagonal());
  }

  TEST_CASE("labels capture snapshots in order") {
    GateProgram p(2);
    p.label("start").h(1).label("mid").cnot(1, 2);
    const auto t = run(p, pseudo_pure(basis_ket(0, 2)));
    REQUIRE(t.states.size() == 2);
    CHECK(t.states[0].label == "start");
    CHECK(t.states[1].label == "mid");
    CHECK(near(t.final.matrix(), ComplexMatrix::projector(bell_ket(0, 0)), 1e-12));
  }

  TEST_CASE("Bell-diagonal preparation reproduces the state family") {
    for (double b : {0.0, 0.4, pi / 2, 2 * pi / 5, 2.9, pi}) {
      for (double g : {0.0, 3 * pi / 10, 1.7, pi}) {
        const BellDiagonalParams params{b, g};
        const auto t = run(bell_diag_program(params), bell_diag_input());
        REQUIRE(t.states.size() == 2);
        CHECK(t.states[1].label == "bell-diagonal");
        CHECK(fidelity(t.final.matrix(), bell_diagonal(params).matrix()) >= 1 - 1e-12);
        CHECK(near(t.final.matrix(), bell_diagonal(params).matrix(), 1e-12));
      }
    }
    CHECK_THROWS_AS(bell_diag_program({-0.1, 0.0}), InputError);
  }

  TEST_CASE("GHZ preparation yields the noisy GHZ family") {
    for (int n : {2, 3, 5}) {
      for (double theta : {0.0, 0.5, 1.2, pi / 2}) {
        const auto prep = ghz_program(n, theta);
        CHECK(near(prep.purity, std::max(0.0, std::cos(theta)), 1e-15));
        const auto t = run(prep.program, prep.input);
        CHECK(near(t.final.matrix(), noisy_ghz({prep.purity, n}).matrix(), 1e-12));
      }
    }
    CHECK_THROWS_AS(ghz_program(3, 2.0), InputError);
    CHECK_THROWS_AS(ghz_program(1, 0.0), InputError);
  }

  TEST_CASE("passivization circuits reach the passive state") {
    const auto nafp = named_system("NAFP");
    for (double b : {0.3, 2 * pi / 5, 2.5}) {
      for (double g : {0.2, 3 * pi / 10, 2.8}) {
        const BellDiagonalParams params{b, g};
        const auto rho = bell_diagonal(params);
        const auto out = run(passivization_program(BellDiagonalFamily{params}, nafp), rho).final;
        CHECK(near(energy(out, nafp), energy(passive_state(rho, nafp), nafp), 1e-9));
        CHECK(near(ergotropy(out, nafp), 0.0, 1e-9));
      }
    }
    for (const char* name : {"FAN", "DBFM"}) {
      const auto h = named_system(name);
      for (double l : {0.2, 0.7, 1.0}) {
        const auto rho = noisy_ghz({l, 3});
        const auto out = run(passivization_program(NoisyGhzFamily{3}, h), rho).final;
        CHECK(near(out.matrix(), passive_state(rho, h).matrix(), 1e-12));
        const auto chain = run(passivization_program(Exp3Family{}, h), rho).final;
        CHECK(near(chain.matrix(), passive_state(rho, h).matrix(), 1e-12));
      }
    }
    const auto tmp = named_system("TMP");
    const auto big = noisy_ghz({0.6, 10});
    CHECK(near(run(passivization_program(NoisyGhzFamily{10}, tmp), big).final.matrix(),
               passive_state(big, tmp).matrix(), 1e-12));
    CHECK_THROWS_AS(passivization_program(NoisyGhzFamily{3}, nafp), InputError);
  }

  TEST_CASE("chain preparation and local passivization") {
    const int pair[] = {1, 2};
    for (double l : {0.0, 0.35, 0.8, 1.0}) {
      const auto rho = run(exp3_program(), pseudo_pure(basis_ket(0, 3), l)).final;
      CHECK(near(rho.matrix(), noisy_ghz({l, 3}).matrix(), 1e-12));
      const auto local = exp3_local_passive(rho.marginal(pair));
      const double a = (1 + l) / 4, b = (1 - l) / 4;
      const std::vector<double> want{a, a, b, b};
      CHECK(near(local.matrix(), ComplexMatrix::diagonal(std::span<const double>(want)), 1e-12));
    }
    std::mt19937_64 rng(8);
    CHECK_THROWS_AS(local_passivization_program(random_density(2, rng), named_system("NAFP")), InputError);
  }

  TEST_CASE("lopsidedness of star registers") {
    CHECK(near(star_lopsidedness(named_system("FAN")), 1 + 2 * 500.0 / 470.385, 1e-12));
    CHECK(near(star_lopsidedness(named_system("TMP")), 1 + 9 * 500.0 / 202.404, 1e-12));
  }

  TEST_CASE("text format round trip") {
    const char* text =
        "# preparation\n"
        "qubits 3\n"
        "ry 0.5 1 2\n"
        "  H 3   # comment\n"
        "CNOT 3 1\n"
        "Crush\n"
        "LABEL after crush\n"
        "RZ -1.25 2\n";
    const auto p = parse_program(text);
    CHECK(p.qubit_count() == 3);
    CHECK(p.steps().size() == 6);
    const auto again = parse_program(serialize(p));
    CHECK(serialize(again) == serialize(p));
    REQUIRE(std::holds_alternative<Label>(p.steps()[4]));
    CHECK(std::get<Label>(p.steps()[4]).text == "after crush");
    CHECK(parse_program("H 2\nCNOT 2 4\n").qubit_count() == 4);
    CHECK(parse_program("H 1\n", 3).qubit_count() == 3);
  }

  TEST_CASE("parse errors name the line") {
    auto message = [](const char* text) {
      try {
        parse_program(text);
      } catch (const InputError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message("H 1\nSWAP 1 2\n").find("line 2") != std::string::npos);
    CHECK(message("QUBITS 2\nRX abc 1\n").find("line 2") != std::string::npos);
    CHECK(message("QUBITS 2\nH 1\nCNOT 1 1\n").find("line 3") != std::string::npos);
    CHECK(message("QUBITS 2\nH 3\n").find("line 2") != std::string::npos);
    CHECK(message("H 1\nQUBITS 2\n").find("line 2") != std::string::npos);
    CHECK(message("H 0\n").find("line 1") != std::string::npos);
    CHECK_THROWS_AS(parse_program("QUBITS 2\n", 3), InputError);
  }

  TEST_CASE("builder validation") {
    GateProgram p(2);
    CHECK_THROWS_AS(p.cnot(1, 1), InputError);
    CHECK_THROWS_AS(p.h(3), InputError);
    CHECK_THROWS_AS(p.rotate(Axis::x, 1.0, {}), InputError);
    CHECK_THROWS_AS(p.rotate(Axis::x, 1.0, {1, 1}), InputError);
    CHECK_THROWS_AS(p.rotate(Axis::x, NAN, {1}), InputError);
    CHECK_THROWS_AS(p.append(GateProgram(3)), InputError);
    CHECK_THROWS_AS(GateProgram(0), InputError);
    CHECK_THROWS_AS(run(p, maximally_mixed(3)), InputError);
  }
}
