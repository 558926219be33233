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

#ifndef ADOR_ADAM_H_
#define ADOR_ADAM_H_

#include <cstdint>
#include <vector>

#include "ador/mlp.h"

namespace ador {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_hat = 1e-8;
};

enum class Direction { kAscend, kDescend };

// Moment accumulators, one flat vector per parameter tensor in the order
// layer0.weight, layer0.bias, layer1.weight, ... (bias entries are empty for
// bias-free layers).
struct AdamState {
  AdamConfig config;
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;
  std::uint64_t t = 0;

  static AdamState For(const MlpParams& params, AdamConfig config = {});
};

// One bias-corrected Adam update. kDescend subtracts the step, kAscend adds
// it. Throws NumericError on non-finite gradients and SpecError when shapes
// disagree.
void AdamStep(MlpParams& params, const MlpGradients& grads, AdamState& state,
              Direction direction);

}  // namespace ador

#endif  // ADOR_ADAM_H_
