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

#ifndef ADOR_KERNELS_H_
#define ADOR_KERNELS_H_

// Inner loops of dense-layer forward and backward passes. Each instruction
// set provides the same table of entry points; the scalar table is the
// reference every other variant is tested against.

#include <cstddef>
#include <string_view>

namespace ador::kernels {

enum class Isa { kScalar, kAvx2 };

struct Table {
  // y[r, o] = dot(x[r, :], w[o, :]) (+ bias[o] when bias != nullptr).
  // x: rows x in, w: out x in, y: rows x out.
  void (*affine)(const double* x, const double* w, const double* bias,
                 double* y, std::size_t rows, std::size_t in,
                 std::size_t out);
  // dx[r, :] = sum_o dy[r, o] * w[o, :]. dx is overwritten.
  void (*backprop_input)(const double* dy, const double* w, double* dx,
                         std::size_t rows, std::size_t in, std::size_t out);
  // dw[o, :] += sum_r dy[r, o] * x[r, :].
  void (*accumulate_weight_grad)(const double* dy, const double* x,
                                 double* dw, std::size_t rows,
                                 std::size_t in, std::size_t out);
  double (*dot)(const double* a, const double* b, std::size_t n);
};

// Table used by the library. Chosen once from ADOR_SIMD (scalar|avx2) if
// set, otherwise from CPU detection.
const Table& Active();
Isa ActiveIsa();

bool Available(Isa isa);
// Throws ador::SpecError when the variant is not compiled in or not
// supported by this CPU.
const Table& ForIsa(Isa isa);

std::string_view Name(Isa isa);

namespace scalar {
const Table& GetTable();
}  // namespace scalar

#ifdef ADOR_HAVE_AVX2
namespace avx2 {
const Table& GetTable();
}  // namespace avx2
#endif

}  // namespace ador::kernels

#endif  // ADOR_KERNELS_H_
