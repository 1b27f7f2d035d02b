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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace ergocert::kernels {

using cplx = std::complex<double>;

/// Coefficients of a 2x2 complex mixing applied to a pair of spans:
///   x' = m00*x + m01*y,  y' = m10*x + m11*y.
struct Mix2 {
  cplx m00, m01, m10, m11;
};

/// One implementation of the arithmetic inner loops. Every entry point
/// takes spans of equal length; behaviour for mismatched lengths is
/// undefined (callers check).
struct KernelTable {
  std::string_view name;

  /// y += a * x
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);

  /// In-place 2x2 mixing of two disjoint spans.
  void (*mix2)(const Mix2& m, cplx* x, cplx* y, std::size_t n);

  /// sum_i conj(x_i) * y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without AVX2 support or the CPU
/// lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// The table selected at first use: AVX2 when available, scalar
/// otherwise. Setting ERGOCERT_SIMD=scalar in the environment forces the
/// scalar path.
const KernelTable& active();

// Span conveniences over the active table.
inline void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline void mix2(const Mix2& m, std::span<cplx> x, std::span<cplx> y) {
  active().mix2(m, x.data(), y.data(), x.size());
}
inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  return active().dotc(x.data(), y.data(), x.size());
}

}  // namespace ergocert::kernels
