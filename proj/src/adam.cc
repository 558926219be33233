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

#include "ador/adam.h"

#include <cmath>
#include <span>

#include "ador/errors.h"

namespace ador {

AdamState AdamState::For(const MlpParams& params, AdamConfig config) {
  if (!(config.lr > 0) || !(config.beta1 >= 0 && config.beta1 < 1) ||
      !(config.beta2 >= 0 && config.beta2 < 1) || !(config.eps_hat > 0)) {
    throw ParameterError("invalid Adam hyperparameters");
  }
  AdamState state;
  state.config = config;
  for (const auto& layer : params.layers) {
    state.m.emplace_back(layer.weight.size(), 0.0);
    state.v.emplace_back(layer.weight.size(), 0.0);
    state.m.emplace_back(layer.bias.size(), 0.0);
    state.v.emplace_back(layer.bias.size(), 0.0);
  }
  return state;
}

namespace {

void UpdateTensor(std::span<double> theta, std::span<const double> g,
                  std::vector<double>& m, std::vector<double>& v,
                  const AdamConfig& c, double correction1, double correction2,
                  double sign) {
  for (std::size_t i = 0; i < theta.size(); ++i) {
    m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g[i];
    v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g[i] * g[i];
    const double m_hat = m[i] / correction1;
    const double v_hat = v[i] / correction2;
    theta[i] += sign * c.lr * m_hat / (std::sqrt(v_hat) + c.eps_hat);
  }
}

}  // namespace

void AdamStep(MlpParams& params, const MlpGradients& grads, AdamState& state,
              Direction direction) {
  const std::size_t depth = params.layers.size();
  if (grads.weight.size() != depth || grads.bias.size() != depth ||
      state.m.size() != 2 * depth) {
    throw SpecError("Adam: gradients or state do not match the network");
  }
  for (std::size_t k = 0; k < depth; ++k) {
    const auto& layer = params.layers[k];
    if (grads.weight[k].size() != layer.weight.size() ||
        grads.bias[k].size() != layer.bias.size()) {
      throw SpecError("Adam: gradient shape mismatch at layer " +
                      std::to_string(k));
    }
    if (!grads.weight[k].AllFinite()) {
      throw NumericError("Adam: non-finite gradient", state.t);
    }
    for (double b : grads.bias[k]) {
      if (!std::isfinite(b)) throw NumericError("Adam: non-finite gradient", state.t);
    }
  }

  state.t += 1;
  const auto& c = state.config;
  const double t = static_cast<double>(state.t);
  const double correction1 = 1.0 - std::pow(c.beta1, t);
  const double correction2 = 1.0 - std::pow(c.beta2, t);
  const double sign = direction == Direction::kAscend ? 1.0 : -1.0;
  for (std::size_t k = 0; k < depth; ++k) {
    auto& layer = params.layers[k];
    UpdateTensor(layer.weight.values(), grads.weight[k].values(),
                 state.m[2 * k], state.v[2 * k], c, correction1, correction2,
                 sign);
    UpdateTensor(layer.bias, grads.bias[k], state.m[2 * k + 1],
                 state.v[2 * k + 1], c, correction1, correction2, sign);
  }
}

}  // namespace ador
