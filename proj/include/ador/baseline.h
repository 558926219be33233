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

#ifndef ADOR_BASELINE_H_
#define ADOR_BASELINE_H_

#include <cstddef>
#include <vector>

#include "ador/adam.h"
#include "ador/dataset.h"
#include "ador/mlp.h"
#include "ador/random.h"
#include "ador/train_report.h"

namespace ador {

// Plain least-squares regression with the same network as AdOR's R.
struct MseConfig {
  std::size_t batch = 128;
  std::size_t iterations = 20000;
  std::vector<std::size_t> hidden = {32, 32, 32};
  double leaky_slope = 0.2;
  AdamConfig adam;
  double smoothing_fraction = 0.1;
  bool standardize = true;
};

struct MseFit {
  MlpParams params;
  Standardizer scaling;
  TrainReport report;  // loss_curve holds the minibatch MSE (standardized units)
};

// Minibatch Adam descent on the mean squared error. The batch is capped at
// n. Throws NumericError when the loss stops being finite.
MseFit FitMseBaseline(const Dataset& data, const MseConfig& cfg, Rng& rng);

std::vector<double> MsePredict(const MseFit& fit, const Matrix& u);

}  // namespace ador

#endif  // ADOR_BASELINE_H_
