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

#include <algorithm>
#include <numbers>
#include <random>

#include "ergocert/errors.hpp"
#include "ergocert/oracle.hpp"
#include "ergocert/states.hpp"
#include "ergocert/tensor.hpp"
#include "helpers.hpp"

using namespace ergocert;
using testing::near;

namespace {

const ComplexMatrix kX = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
const ComplexMatrix kZ = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
const double kR = std::numbers::sqrt2 / 2;
const ComplexMatrix kH = ComplexMatrix::from_rows({{kR, kR}, {kR, -kR}});
const ComplexMatrix kCnot =
    ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});

ComplexMatrix diag(std::initializer_list<double> d) {
  std::vector<double> v(d);
  return ComplexMatrix::diagonal(std::span<const double>(v));
}

}  // namespace

TEST_SUITE("tensor") {
  TEST_CASE("kron") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
    CHECK(kron(diag({1, 2}), diag({3, 4})) == diag({3, 4, 6, 8}));
    const auto zz = kron(kZ, kZ);
    CHECK(zz(1, 1) == cplx(-1.0));  // |01>

    std::mt19937_64 rng(3);
    const auto a = testing::random_hermitian(4, rng), b = testing::random_hermitian(2, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-12);
    const auto k = kron(a, b);
    CHECK(k(1 * 2 + 1, 3 * 2 + 0) == a(1, 3) * b(1, 0));
  }

  TEST_CASE("partial trace") {
    std::mt19937_64 rng(5);
    const auto rho = random_density(2, rng).matrix();
    const auto sigma = random_density(1, rng).matrix();
    const int keep1[] = {1, 2};
    CHECK(near(partial_trace(kron(rho, sigma), keep1, 3), rho, 1e-14));

    const int first[] = {1};
    CHECK(near(partial_trace(ComplexMatrix::projector(bell_ket(1, 0)), first, 2), diag({0.5, 0.5}), 1e-15));

    const int pair[] = {1, 2};
    CHECK(near(partial_trace(ComplexMatrix::projector(ghz_ket(3)), pair, 3), diag({0.5, 0, 0, 0.5}), 1e-15));

    // Kept qubits come out in ascending order whatever order they are given in.
    const auto ab = kron(diag({1, 0}), diag({0, 1}));
    const int reversed[] = {2, 1};
    CHECK(partial_trace(ab, reversed, 2) == partial_trace(ab, pair, 2));

    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_density(4, rng).matrix();
      const int keep[] = {2, 4};
      CHECK(std::abs(partial_trace(m, keep, 4).trace() - m.trace()) <= 1e-12);
    }

    const int bad[] = {3};
    CHECK_THROWS_AS(partial_trace(rho, bad, 2), InputError);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix(3), first, 2), InputError);
    CHECK_THROWS_AS(qubits_for_dim(6), InputError);
  }

  TEST_CASE("eig_hermitian examples") {
    const auto e = eig_hermitian(diag({0.1, 0.7, 0.2}));
    CHECK(near(e.eigenvalues[0], 0.7, 1e-15));
    CHECK(near(e.eigenvalues[1], 0.2, 1e-15));
    CHECK(near(e.eigenvalues[2], 0.1, 1e-15));

    const auto w = eigvals_hermitian(ComplexMatrix::projector(bell_ket(0, 0)));
    CHECK(near(w[0], 1.0, 1e-14));
    for (std::size_t i = 1; i < 4; ++i) CHECK(near(w[i], 0.0, 1e-14));

    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::from_rows({{0, 1}, {0, 0}})), NumericalError);
  }

  TEST_CASE("eig_hermitian reconstruction and orthonormality") {
    std::mt19937_64 rng(9);
    for (std::size_t dim : {1u, 2u, 8u, 16u, 64u}) {
      const auto m = testing::random_hermitian(dim, rng);
      const auto e = eig_hermitian(m);
      CHECK(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
      const auto& v = e.eigenvectors;
      ComplexMatrix d(dim);
      for (std::size_t i = 0; i < dim; ++i) d(i, i) = e.eigenvalues[i];
      CHECK(frobenius_distance(matmul(matmul(v, d), v.adjoint()), m) <= 1e-9);
      CHECK(frobenius_distance(matmul(v.adjoint(), v), ComplexMatrix::identity(dim)) <= 1e-9);
    }
  }

  TEST_CASE("block detection agrees with a dense solve") {
    std::mt19937_64 rng(13);
    // Two hidden 3x3 blocks and two isolated levels, scattered by a permutation.
    const std::size_t dim = 8;
    std::vector<std::size_t> perm{5, 0, 7, 2, 3, 6, 1, 4};
    const auto b1 = testing::random_hermitian(3, rng), b2 = testing::random_hermitian(3, rng);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        m(perm[i], perm[j]) = b1(i, j);
        m(perm[3 + i], perm[3 + j]) = b2(i, j);
      }
    m(perm[6], perm[6]) = 0.25;
    m(perm[7], perm[7]) = -3.0;

    const ComplexMatrix* ms[] = {&m};
    const auto blocks = coupled_blocks(ms);
    CHECK(blocks.size() == 4);

    auto expected = eigvals_hermitian(b1);
    const auto w2 = eigvals_hermitian(b2);
    expected.insert(expected.end(), w2.begin(), w2.end());
    expected.push_back(0.25);
    expected.push_back(-3.0);
    std::sort(expected.rbegin(), expected.rend());
    const auto got = eig_hermitian(m);
    for (std::size_t i = 0; i < dim; ++i) CHECK(near(got.eigenvalues[i], expected[i], 1e-12));
    ComplexMatrix d(dim);
    for (std::size_t i = 0; i < dim; ++i) d(i, i) = got.eigenvalues[i];
    CHECK(frobenius_distance(matmul(matmul(got.eigenvectors, d), got.eigenvectors.adjoint()), m) <= 1e-9);
  }

  TEST_CASE("apply_unitary") {
    const auto zero = diag({1, 0});
    CHECK(apply_unitary(zero, ComplexMatrix::identity(2)) == zero);
    CHECK(near(apply_unitary(zero, kX), diag({0, 1}), 0.0));

    const auto u = matmul(kCnot, kron(kH, ComplexMatrix::identity(2)));
    const auto out = apply_unitary(diag({1, 0, 0, 0}), u);
    CHECK(near(out, ComplexMatrix::projector(bell_ket(0, 0)), 1e-15));

    CHECK_THROWS_AS(apply_unitary(zero, diag({1, 2})), NumericalError);
    CHECK_THROWS_AS(apply_unitary(zero, kCnot), InputError);

    std::mt19937_64 rng(21);
    const auto rho = random_density(3, rng).matrix();
    const auto ev = eig_hermitian(testing::random_hermitian(8, rng)).eigenvectors;
    const auto a = eigvals_hermitian(rho), b = eigvals_hermitian(apply_unitary(rho, ev));
    for (std::size_t i = 0; i < 8; ++i) CHECK(near(a[i], b[i], 1e-9));
  }

  TEST_CASE("fidelity and trace distance") {
    std::mt19937_64 rng(17);
    const auto a = random_density(2, rng).matrix(), b = random_density(2, rng).matrix();
    CHECK(near(fidelity(a, a), 1.0, 1e-12));
    CHECK(near(fidelity(a, b), fidelity(b, a), 1e-10));
    CHECK(near(fidelity(diag({1, 0}), diag({0, 1})), 0.0, 1e-15));
    CHECK(near(fidelity(diag({1, 0}), diag({0.5, 0.5})), 0.5, 1e-15));
    CHECK(near(trace_distance(diag({1, 0}), diag({0, 1})), 1.0, 1e-15));
    CHECK(near(trace_distance(a, a), 0.0, 1e-15));
    const auto pure = ComplexMatrix::projector(bell_ket(0, 1));
    CHECK(near(fidelity(pure, ComplexMatrix::identity(4) * cplx(0.25)), 0.25, 1e-12));
  }
}
