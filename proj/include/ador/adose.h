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

#ifndef ADOR_ADOSE_H_
#define ADOR_ADOSE_H_

// Adversarial orthogonal structural equation model: a generator-style
// regression network R consumes the regressors together with noise drawn
// from a standard normal and reshaped by a small network (RanTrans), while
// a DV critic estimates the KL divergence between the true and the
// generated joint law of (U, Z).

#include <cstddef>
#include <span>
#include <vector>

#include "ador/adam.h"
#include "ador/dataset.h"
#include "ador/mlp.h"
#include "ador/random.h"
#include "ador/train_report.h"
#include "json.hpp"

namespace ador {

struct AdoseConfig {
  std::size_t batch_b = 128;
  std::size_t iterations = 3000;
  // Linear step feedback: k_r = a + b L, k_kl = a - b L (floored, clamped).
  double feedback_a = 30.0;
  double feedback_b = 10.0;
  int step_min = 1;
  int step_max = 100;
  std::vector<std::size_t> r_hidden = {32, 32, 32};
  std::vector<std::size_t> kl_hidden = {32, 32, 32};
  std::size_t rantrans_hidden = 16;
  double leaky_slope = 0.2;
  // One shared learning rate; 1e-3 let either side run away.
  AdamConfig r_adam{.lr = 3e-4};  // shared by R and RanTrans
  AdamConfig kl_adam{.lr = 3e-4};
  double smoothing_fraction = 0.1;
  bool standardize = true;

  // Throws ParameterError.
  void Validate() const;
};

struct StepCounts {
  int k_r = 1;
  int k_kl = 1;
};

// k_r = clamp(floor(a + b * loss), step_min, step_max) and
// k_kl = clamp(floor(a - b * loss), step_min, step_max).
StepCounts FeedbackSteps(double loss, const AdoseConfig& cfg);

// One hidden leaky-ReLU layer, scalar in and out.
std::vector<LayerSpec> RanTransSpecs(std::size_t hidden, double leaky_slope);

struct AdoseModel {
  MlpParams r;         // input [u | eps], width m + 1, output with bias
  MlpParams rantrans;  // n_G -> eps
  MlpParams kl;        // input [u | z], width m + 1, bias-free output
  Standardizer scaling;
  TrainReport report;  // includes the applied step counts per iteration
};

// Per iteration: draw b standard-normal n_G and b rows, evaluate the critic
// on true (u, z) and generated (u, z_hat), set (k_r, k_kl) from the
// minibatch loss, then take k_r descent steps on R and RanTrans jointly and
// k_kl ascent steps on the critic, all on those rows. Every generator step
// and the critic phase draw fresh n_G. Throws SpecError
// when n < b and NumericError on divergence.
AdoseModel AdoseTrain(const Dataset& data, const AdoseConfig& cfg, Rng& rng);

// n_draws samples of the learned conditional Z | U = u_row (original units).
std::vector<double> AdoseSample(const AdoseModel& model,
                                std::span<const double> u_row,
                                std::size_t n_draws, Rng& rng);

// One draw of Z | U = u for every row of u (original units).
std::vector<double> AdoseSampleRows(const AdoseModel& model, const Matrix& u,
                                    Rng& rng);

// Mean of n_draws samples at u_row. Throws SpecError for n_draws == 0.
double ConditionalMean(const AdoseModel& model, std::span<const double> u_row,
                       std::size_t n_draws, Rng& rng);

// ConditionalMean for every row of u.
std::vector<double> ConditionalMeans(const AdoseModel& model, const Matrix& u,
                                     std::size_t n_draws, Rng& rng);

nlohmann::json AdoseModelToJson(const AdoseModel& model, bool include_timing);
AdoseModel AdoseModelFromJson(const nlohmann::json& doc);

}  // namespace ador

#endif  // ADOR_ADOSE_H_
