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

#include "ergocert/errors.hpp"
#include "ergocert/threshold.hpp"
#include "helpers.hpp"

using namespace ergocert;
using testing::near;

namespace {
constexpr double wF = 470.385, wH = 500.0, wC = 125.721;
}

TEST_SUITE("threshold") {
  TEST_CASE("Werner family crosses at one third") {
    const auto r = solve_threshold(werner_family(), named_system("BRTP"), Bipartition({1}, 2), Bound::g);
    REQUIRE(r.status == ThresholdStatus::found);
    CHECK(near(r.lambda, 1.0 / 3, 1e-6));
    CHECK(r.evaluations > 64);
  }

  TEST_CASE("GL thresholds of noisy GHZ follow the closed form") {
    const auto fan = named_system("FAN");
    for (const auto& x : {std::vector<int>{1}, std::vector<int>{2, 3}}) {
      const Bipartition part(x, 3);
      const auto r = solve_threshold(noisy_ghz_family(3), fan, part, Bound::gl);
      REQUIRE(r.status == ThresholdStatus::found);
      CHECK(near(r.lambda, gl_threshold_formula(3, part.kappa()), 1e-6));
    }
  }

  TEST_CASE("DBFM G threshold matches the hand-derived root") {
    // delta = (C+F)l/2 - F/2, bound = (1-l)(2H-4F+2C)/8
    const double s = 2 * wH - 4 * wF + 2 * wC;
    const double root = (wF / 2 + s / 8) / ((wC + wF) / 2 + s / 8);
    const auto r = solve_threshold(noisy_ghz_family(3), named_system("DBFM"), Bipartition({1, 2}, 3), Bound::g);
    REQUIRE(r.status == ThresholdStatus::found);
    CHECK(near(r.lambda, root, 1e-6));
    CHECK(near(r.lambda, 0.7133, 5e-3));
  }

  TEST_CASE("tolerance controls the bracket") {
    const auto h = named_system("BRTP");
    const Bipartition part({1}, 2);
    const auto coarse = solve_threshold(werner_family(), h, part, Bound::g, {64, 1e-3});
    const auto fine = solve_threshold(werner_family(), h, part, Bound::g, {64, 1e-10});
    CHECK(std::abs(coarse.lambda - 1.0 / 3) <= 1e-3);
    CHECK(std::abs(fine.lambda - 1.0 / 3) <= 1e-9);
    CHECK(fine.evaluations > coarse.evaluations);
  }

  TEST_CASE("always and never") {
    const auto h = named_system("FAN");
    const Bipartition part({1}, 3);
    const StateFamily pure = [](double) { return noisy_ghz({1.0, 3}); };
    const StateFamily mixed = [](double) { return maximally_mixed(3); };
    const auto a = solve_threshold(pure, h, part, Bound::g);
    CHECK(a.status == ThresholdStatus::always);
    CHECK(a.lambda == 0.0);
    const auto n = solve_threshold(mixed, h, part, Bound::i);
    CHECK(n.status == ThresholdStatus::never);
    CHECK(n.lambda == 1.0);
    CHECK(to_string(ThresholdStatus::never) == "never");
  }

  TEST_CASE("non-monotone family is rejected") {
    const StateFamily tent = [](double l) { return noisy_ghz({1.0 - std::abs(2 * l - 1), 3}); };
    CHECK_THROWS_AS(solve_threshold(tent, named_system("FAN"), Bipartition({1}, 3), Bound::g), NumericalError);
  }

  TEST_CASE("bad options") {
    const auto h = named_system("BRTP");
    const Bipartition part({1}, 2);
    CHECK_THROWS_AS(solve_threshold(werner_family(), h, part, Bound::g, {1, 1e-7}), InputError);
    CHECK_THROWS_AS(solve_threshold(werner_family(), h, part, Bound::g, {64, 0.0}), InputError);
  }

  TEST_CASE("detection margin sign matches the verdict") {
    const auto h = named_system("BRTP");
    const Bipartition part({1}, 2);
    for (double l : {0.2, 0.5, 0.9}) {
      const auto r = certify(werner(l), h, part);
      for (auto b : {Bound::gl, Bound::g, Bound::i}) {
        const double m = detection_margin(werner(l), h, part, b);
        CHECK(near(m, r.delta - r.bound(b), 1e-12));
        CHECK((m > kVerdictTol) == (r.verdict(b) == Verdict::entangled));
      }
    }
  }
}
