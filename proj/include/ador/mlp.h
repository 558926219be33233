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

#ifndef ADOR_MLP_H_
#define ADOR_MLP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "ador/activation.h"
#include "ador/matrix.h"
#include "ador/random.h"

namespace ador {

struct LayerSpec {
  std::size_t in_width = 1;
  std::size_t out_width = 1;
  Activation activation;
  bool has_bias = true;
};

struct DenseLayer {
  Matrix weight;              // out x in
  std::vector<double> bias;   // out entries, empty when has_bias is false
  Activation activation;
  bool has_bias = true;

  std::size_t in_width() const { return weight.cols(); }
  std::size_t out_width() const { return weight.rows(); }
};

// Parameters of a multilayer perceptron. Layers chain: layer k's output
// width equals layer k+1's input width.
struct MlpParams {
  std::vector<DenseLayer> layers;

  std::size_t in_width() const;
  std::size_t out_width() const;
  std::size_t parameter_count() const;
  std::vector<LayerSpec> specs() const;
};

// Gradients congruent to MlpParams. bias[k] is empty for bias-free layers.
struct MlpGradients {
  std::vector<Matrix> weight;
  std::vector<std::vector<double>> bias;

  static MlpGradients ZerosLike(const MlpParams& params);
};

// Per-layer values saved by Forward for the backward pass. inputs[k] is the
// input to layer k (inputs[0] is the batch), pre[k] its pre-activation.
struct ForwardCache {
  std::vector<Matrix> inputs;
  std::vector<Matrix> pre;
  Matrix output;
};

struct ForwardResult {
  Matrix output;
  ForwardCache cache;
};

struct BackwardResult {
  MlpGradients params;
  Matrix input;  // d loss / d input, batch x in_width
};

// Checks widths, chaining and activation slopes. Throws SpecError.
void ValidateSpecs(std::span<const LayerSpec> specs);

// Layer list `in -> hidden[0] -> ... -> out`. hidden_activations must have
// one entry per hidden layer; every hidden layer carries a bias.
std::vector<LayerSpec> BuildSpecs(std::size_t in_width,
                                  std::span<const std::size_t> hidden_widths,
                                  std::span<const Activation> hidden_activations,
                                  std::size_t out_width,
                                  Activation output_activation,
                                  bool output_bias);

// Glorot-uniform weights on +-sqrt(6 / (fan_in + fan_out)), zero biases.
MlpParams XavierInit(std::span<const LayerSpec> specs, Rng& rng);

// Forward pass retaining the cache. Throws SpecError on width mismatch and
// NumericError when the output is not finite.
ForwardResult Forward(const MlpParams& params, const Matrix& input);

// Forward pass without the cache.
Matrix Predict(const MlpParams& params, const Matrix& input);

// Reverse-mode gradients of sum(output .* output_grad) with respect to the
// parameters and the input.
BackwardResult Backward(const MlpParams& params, const ForwardCache& cache,
                        const Matrix& output_grad);

bool AllFinite(const MlpParams& params);

// avg = decay * avg + (1 - decay) * current, tensor by tensor; the
// networks must share one layout.
void BlendInto(MlpParams& avg, const MlpParams& current, double decay);

// acc += other; shapes must agree.
void AddInPlace(MlpGradients& acc, const MlpGradients& other);

}  // namespace ador

#endif  // ADOR_MLP_H_
