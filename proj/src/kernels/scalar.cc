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

#include "ador/kernels.h"

namespace ador::kernels::scalar {
namespace {

double Dot(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void Affine(const double* x, const double* w, const double* bias, double* y,
            std::size_t rows, std::size_t in, std::size_t out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = x + r * in;
    double* yr = y + r * out;
    for (std::size_t o = 0; o < out; ++o) {
      double v = Dot(xr, w + o * in, in);
      if (bias != nullptr) v += bias[o];
      yr[o] = v;
    }
  }
}

void BackpropInput(const double* dy, const double* w, double* dx,
                   std::size_t rows, std::size_t in, std::size_t out) {
  for (std::size_t r = 0; r < rows; ++r) {
    double* dxr = dx + r * in;
    for (std::size_t i = 0; i < in; ++i) dxr[i] = 0.0;
    const double* dyr = dy + r * out;
    for (std::size_t o = 0; o < out; ++o) {
      const double g = dyr[o];
      const double* wo = w + o * in;
      for (std::size_t i = 0; i < in; ++i) dxr[i] += g * wo[i];
    }
  }
}

void AccumulateWeightGrad(const double* dy, const double* x, double* dw,
                          std::size_t rows, std::size_t in, std::size_t out) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = x + r * in;
    const double* dyr = dy + r * out;
    for (std::size_t o = 0; o < out; ++o) {
      const double g = dyr[o];
      double* dwo = dw + o * in;
      for (std::size_t i = 0; i < in; ++i) dwo[i] += g * xr[i];
    }
  }
}

constexpr Table kTable{&Affine, &BackpropInput, &AccumulateWeightGrad, &Dot};

}  // namespace

const Table& GetTable() { return kTable; }

}  // namespace ador::kernels::scalar
