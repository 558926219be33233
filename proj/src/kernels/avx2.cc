/*
 * Copyright 2026 The ador Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Compiled with -mavx2 -mfma. Only intrinsics and plain loops live here so
// that no inline library function is emitted with AVX2 code and then shared
// with the scalar translation units.

#include <immintrin.h>

#include "ador/kernels.h"

namespace ador::kernels::avx2 {
namespace {

inline double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double Dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

// y[0:n] += alpha * x[0:n]
inline void Axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void Affine(const double* x, const double* w, const double* bias, double* y,
            std::size_t rows, std::size_t in, std::size_t out) {
  if (in < 4) {
    // Narrow inputs (the first layer of a scalar regression) gain nothing
    // from a dot-product kernel; broadcast each input over the outputs.
    for (std::size_t r = 0; r < rows; ++r) {
      const double* xr = x + r * in;
      double* yr = y + r * out;
      for (std::size_t o = 0; o < out; ++o) {
        double v = 0.0;
        for (std::size_t i = 0; i < in; ++i) v += xr[i] * w[o * in + i];
        yr[o] = bias != nullptr ? v + bias[o] : v;
      }
    }
    return;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = x + r * in;
    double* yr = y + r * out;
    for (std::size_t o = 0; o < out; ++o) {
      const double v = Dot(xr, w + o * in, in);
      yr[o] = bias != nullptr ? v + bias[o] : v;
    }
  }
}

void BackpropInput(const double* dy, const double* w, double* dx,
                   std::size_t rows, std::size_t in, std::size_t out) {
  for (std::size_t r = 0; r < rows; ++r) {
    double* dxr = dx + r * in;
    for (std::size_t i = 0; i < in; ++i) dxr[i] = 0.0;
    const double* dyr = dy + r * out;
    for (std::size_t o = 0; o < out; ++o) Axpy(dyr[o], w + o * in, dxr, in);
  }
}

void AccumulateWeightGrad(const double* dy, const double* x, double* dw,
                          std::size_t rows, std::size_t in, std::size_t out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = x + r * in;
    const double* dyr = dy + r * out;
    for (std::size_t o = 0; o < out; ++o) Axpy(dyr[o], xr, dw + o * in, in);
  }
}

constexpr Table kTable{&Affine, &BackpropInput, &AccumulateWeightGrad, &Dot};

}  // namespace

const Table& GetTable() { return kTable; }

}  // namespace ador::kernels::avx2
