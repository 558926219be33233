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

#ifndef ADOR_ADOR_H_
#define ADOR_ADOR_H_

// Adversarial orthogonal regression: a regression network R is trained to
// make its residual independent of the regressors while a MINE critic
// estimates the residual/regressor mutual information.

#include <cstddef>
#include <span>
#include <vector>

#include "ador/adam.h"
#include "ador/dataset.h"
#include "ador/mine.h"
#include "ador/mlp.h"
#include "ador/random.h"
#include "ador/train_report.h"
#include "json.hpp"

namespace ador {

struct AdorConfig {
  std::size_t batch_half_b = 128;  // each iteration draws 2b rows
  std::size_t iterations = 5000;
  std::size_t k_r = 1;
  std::size_t k_mi = 5;
  std::vector<std::size_t> r_hidden = {32, 32, 32};
  std::vector<std::size_t> mi_hidden = {32, 32, 32};
  double leaky_slope = 0.2;
  // One shared learning rate; 1e-3 left the last iterates oscillating.
  AdamConfig r_adam{.lr = 3e-4};
  AdamConfig mi_adam{.lr = 3e-4};
  double smoothing_fraction = 0.1;
  // When positive, the returned R is an exponential moving average of the
  // iterates with this decay rather than the last iterate. Averaging damps
  // the oscillation the adversarial game leaves in the final iterate.
  double r_ema_decay = 0.999;
  // Train on zero-mean, unit-variance U and Z; predictions are mapped back.
  bool standardize = true;

  // Throws ParameterError.
  void Validate() const;
};

// Regression-network layout: hidden activations cycle tanh, sigmoid,
// leaky-ReLU; scalar identity output.
std::vector<LayerSpec> RegressionSpecs(std::size_t in_width,
                                       const std::vector<std::size_t>& hidden,
                                       double leaky_slope, bool output_bias);

struct AdorModel {
  MlpParams r;   // input width m, bias-free output
  MlpParams mi;  // input [residual | u], width m + 1
  Standardizer scaling;
  // Mean training residual (standardized units), added to R's output so
  // predictions carry a calibrated constant.
  double intercept = 0.0;
  TrainReport report;
};

// DV loss of the critic on the batch-centred residuals z - R(u) of a 2b-row
// minibatch, and its gradient with respect to R's parameters.
struct RegressionPass {
  double loss = 0.0;
  MlpGradients grads;
};
RegressionPass AdorRegressionPass(const MlpParams& r, const MlpParams& mi,
                                  const Matrix& u, std::span<const double> z);

// Each iteration draws 2b rows, then takes k_r Adam descent steps on R
// and k_mi Adam ascent steps on the critic, all on that minibatch. The
// report's loss curve holds the minibatch loss before the iteration's
// updates. Throws SpecError when n < 2b and NumericError on divergence.
AdorModel AdorTrain(const Dataset& data, const AdorConfig& cfg, Rng& rng);

// Deterministic prediction in the original response units. R has no output
// bias, so the map is identified only up to an additive constant; the
// constant used here is the training-set intercept.
std::vector<double> AdorPredict(const AdorModel& model, const Matrix& u);

// z - prediction, in original units.
std::vector<double> AdorResiduals(const AdorModel& model, const Dataset& data);

// Audit settings used when none are given: a small batch and a low
// learning rate keep the estimator's positive small-sample bias well below
// the dependence levels of interest at a few hundred rows.
MineConfig ResidualAuditDefaults();

// Fresh MINE critic trained from scratch on (residual, u) over the full
// dataset. The batch is reduced to n / 4 when the dataset is too small for
// cfg.batch.
MineEstimate ResidualMiAudit(const AdorModel& model, const Dataset& data,
                             const MineConfig& cfg, Rng& rng);

nlohmann::json AdorModelToJson(const AdorModel& model, bool include_timing);
AdorModel AdorModelFromJson(const nlohmann::json& doc);

}  // namespace ador

#endif  // ADOR_ADOR_H_
