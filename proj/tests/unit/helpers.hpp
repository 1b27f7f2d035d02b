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

#include <cmath>
#include <random>

#include "ergocert/tensor.hpp"

namespace testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const ergocert::ComplexMatrix& a, const ergocert::ComplexMatrix& b, double tol) {
  return a.dim() == b.dim() && ergocert::max_abs_difference(a, b) <= tol;
}

inline ergocert::ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ergocert::ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = {g(rng), g(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace testing
