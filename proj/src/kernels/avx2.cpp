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

// AVX2/FMA variants of the complex inner loops. This translation unit is
// the only one compiled with -mavx2 -mfma; nothing here may be called
// before dispatch has confirmed CPU support.

#include <immintrin.h>

#include "ergocert/kernels.hpp"

namespace ergocert::kernels {
namespace {

// Two complex doubles per register, interleaved [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

struct Broadcast {
  __m256d re;
  __m256d im;
  explicit Broadcast(cplx a) : re(_mm256_set1_pd(a.real())), im(_mm256_set1_pd(a.imag())) {}
};

// a * v for a broadcast complex scalar.
inline __m256d cmul(const Broadcast& a, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(a.re, v, _mm256_mul_pd(a.im, swapped));
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const Broadcast ab(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(ab, load2(x + i))));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void mix2_avx2(const Mix2& m, cplx* x, cplx* y, std::size_t n) {
  const Broadcast b00(m.m00), b01(m.m01), b10(m.m10), b11(m.m11);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    store2(x + i, _mm256_add_pd(cmul(b00, xv), cmul(b01, yv)));
    store2(y + i, _mm256_add_pd(cmul(b10, xv), cmul(b11, yv)));
  }
  for (; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = m.m00 * xi + m.m01 * yi;
    y[i] = m.m10 * xi + m.m11 * yi;
  }
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(c, cross);
  cplx acc{(s[0] + s[1]) + (s[2] + s[3]), (c[0] - c[1]) + (c[2] - c[3])};
  for (; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &axpy_avx2, &mix2_avx2, &dotc_avx2};
  return table;
}

}  // namespace ergocert::kernels
