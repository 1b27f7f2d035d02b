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

#include "ergocert/kernels.hpp"

namespace ergocert::kernels {
namespace {

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void mix2_scalar(const Mix2& m, cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = m.m00 * xi + m.m01 * yi;
    y[i] = m.m10 * xi + m.m11 * yi;
  }
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &axpy_scalar, &mix2_scalar, &dotc_scalar};
  return table;
}

}  // namespace ergocert::kernels
