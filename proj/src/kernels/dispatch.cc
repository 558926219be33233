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

#include <cstdlib>
#include <string>

#include "ador/errors.h"
#include "ador/kernels.h"

namespace ador::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(ADOR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa SelectIsa() {
  if (const char* env = std::getenv("ADOR_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && Available(Isa::kAvx2)) return Isa::kAvx2;
  }
  return Available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

}  // namespace

bool Available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return CpuHasAvx2();
  }
  return false;
}

const Table& ForIsa(Isa isa) {
  if (!Available(isa)) {
    throw SpecError("kernel variant '" + std::string(Name(isa)) +
                    "' is not available on this build or CPU");
  }
  switch (isa) {
    case Isa::kScalar:
      return scalar::GetTable();
    case Isa::kAvx2:
#ifdef ADOR_HAVE_AVX2
      return avx2::GetTable();
#else
      break;
#endif
  }
  return scalar::GetTable();
}

Isa ActiveIsa() {
  static const Isa isa = SelectIsa();
  return isa;
}

const Table& Active() {
  static const Table& table = ForIsa(ActiveIsa());
  return table;
}

std::string_view Name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace ador::kernels
