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

#ifndef ADOR_MINE_H_
#define ADOR_MINE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ador/adam.h"
#include "ador/matrix.h"
#include "ador/mlp.h"
#include "ador/random.h"

namespace ador {

// Statistics-network layout shared by the MI and KL critics: leaky-ReLU
// hidden layers and a bias-free scalar output (a constant added to the
// critic cancels in the DV objective).
std::vector<LayerSpec> CriticSpecs(std::size_t in_width,
                                   const std::vector<std::size_t>& hidden,
                                   double leaky_slope = 0.2);

// Critic applied to a joint and a marginal batch, with DV loss gradients
// propagated to the critic parameters and (optionally) to its inputs.
struct CriticPass {
  double loss = 0.0;
  MlpGradients params;
  Matrix joint_input_grad;
  Matrix marginal_input_grad;
};

CriticPass EvaluateCritic(const MlpParams& critic, const Matrix& joint,
                          const Matrix& marginal, bool want_input_grads);

struct MineConfig {
  std::size_t batch = 256;  // b: joint and marginal pairs per iteration
  std::size_t iterations = 3000;
  std::vector<std::size_t> hidden = {32, 32, 32};
  double leaky_slope = 0.2;
  AdamConfig adam;
  // Reported estimate = mean loss over this trailing fraction of iterations.
  double smoothing_fraction = 0.1;
};

struct MineEstimate {
  double mi_nats = 0.0;            // raw smoothed value, may be negative
  std::vector<double> loss_curve;  // one entry per iteration
  std::size_t iterations = 0;
  std::uint64_t seed = 0;

  // max(mi_nats, 0), the value shown in user-facing audits.
  double clamped() const { return mi_nats > 0 ? mi_nats : 0.0; }
};

// MINE: trains a fresh statistics network T on [y | x] by Adam ascent of
// the DV bound, drawing 2b fresh rows per iteration and pairing them with
// MarginalPairing. Both inputs are standardized per column first (MI is
// invariant under that map). Requires n >= 4 * batch. Throws SpecError on
// bad shapes and NumericError (with iteration) on divergence.
MineEstimate EstimateMi(const Matrix& x, const Matrix& y, const MineConfig& cfg,
                        Rng& rng);

// Per-column zero-mean, unit-variance copy (constant columns are centred).
Matrix StandardizeColumns(const Matrix& m);

}  // namespace ador

#endif  // ADOR_MINE_H_
