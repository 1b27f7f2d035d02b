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

#include "ergocert/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ergocert/errors.hpp"

namespace ergocert {

std::string_view to_string(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::found: return "found";
    case ThresholdStatus::never: return "never";
    case ThresholdStatus::always: return "always";
  }
  return "?";
}

double detection_margin(const DensityOperator& rho, const QubitHamiltonian& h, const Bipartition& part,
                        Bound bound) {
  const DeltaEvaluation d = evaluate_delta(rho, h, part);
  const auto levels_full = level_structure(h);
  const auto levels_x = level_structure(h, part.x());
  switch (bound) {
    case Bound::i:
      return d.thermodynamic - bound_i(levels_full, levels_x);
    case Bound::g:
      return d.thermodynamic - bound_g(SpectralVector(rho.spectrum()), levels_full, levels_x);
    case Bound::gl:
      return d.thermodynamic - bound_gl(SpectralVector(rho.spectrum()),
                                        SpectralVector(rho.marginal(part.x()).spectrum()), levels_full,
                                        levels_x);
  }
  return 0.0;
}

ThresholdResult solve_threshold(const StateFamily& family, const QubitHamiltonian& h, const Bipartition& part,
                                Bound bound, const ThresholdOptions& opts) {
  if (opts.samples < 2) throw InputError("solve_threshold: need at least 2 samples");
  if (!(opts.tolerance > 0.0)) throw InputError("solve_threshold: tolerance must be positive");

  ThresholdResult result;
  auto margin = [&](double lambda) {
    ++result.evaluations;
    return detection_margin(family(lambda), h, part, bound);
  };

  std::vector<double> grid(static_cast<std::size_t>(opts.samples));
  std::vector<double> values(grid.size());
  double scale = 1.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid[k] = static_cast<double>(k) / static_cast<double>(grid.size() - 1);
    values[k] = margin(grid[k]);
    scale = std::max(scale, std::abs(values[k]));
  }
  const double slack = 1e-9 * scale;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (values[k] < values[k - 1] - slack) {
      throw NumericalError("solve_threshold: margin decreases between lambda=" + std::to_string(grid[k - 1]) +
                           " and lambda=" + std::to_string(grid[k]));
    }
  }

  if (values.front() > 0.0) {
    result.status = ThresholdStatus::always;
    result.lambda = 0.0;
    return result;
  }
  if (values.back() <= 0.0) {
    result.status = ThresholdStatus::never;
    result.lambda = 1.0;
    return result;
  }

  const auto first = std::find_if(values.begin(), values.end(), [](double v) { return v > 0.0; });
  const auto k = static_cast<std::size_t>(first - values.begin());
  double lo = grid[k - 1], hi = grid[k];
  while (hi - lo > opts.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) > 0.0) hi = mid;
    else lo = mid;
  }
  result.status = ThresholdStatus::found;
  result.lambda = 0.5 * (lo + hi);
  return result;
}

StateFamily noisy_ghz_family(int qubit_count) {
  return [qubit_count](double lambda) { return noisy_ghz({lambda, qubit_count}); };
}

StateFamily werner_family() {
  return [](double lambda) { return werner(lambda); };
}

}  // namespace ergocert
