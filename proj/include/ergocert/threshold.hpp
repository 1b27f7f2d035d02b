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

#include <functional>
#include <string_view>

#include "ergocert/certify.hpp"

namespace ergocert {

/// A one-parameter state family, lambda in [0, 1].
using StateFamily = std::function<DensityOperator(double)>;

enum class ThresholdStatus { found, never, always };
std::string_view to_string(ThresholdStatus s);

struct ThresholdOptions {
  int samples = 64;
  double tolerance = 1e-7;
};

struct ThresholdResult {
  ThresholdStatus status = ThresholdStatus::never;
  double lambda = 0.0;  // root when found; 1 for never, 0 for always
  int evaluations = 0;
};

/// Delta(lambda) - bound(lambda).
double detection_margin(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part,
                        Bound bound);

/// Locates the purity where Delta crosses the chosen bound. The margin is
/// sampled on an even grid first; a decrease between samples beyond
/// rounding raises NumericalError. "never" means the bound is not exceeded
/// anywhere on [0, 1], "always" that it is already exceeded at 0.
ThresholdResult solve_threshold(const StateFamily& family, const QubitHamiltonian& h, const Bipartition& part,
                                Bound bound, const ThresholdOptions& opts = {});

/// noisy_ghz(lambda, N) as a family.
StateFamily noisy_ghz_family(int qubit_count);
StateFamily werner_family();

}  // namespace ergocert
