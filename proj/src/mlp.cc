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

#include "ador/mlp.h"

#include <cmath>
#include <string>

#include "ador/errors.h"
#include "ador/kernels.h"

namespace ador {

std::size_t MlpParams::in_width() const {
  return layers.empty() ? 0 : layers.front().in_width();
}

std::size_t MlpParams::out_width() const {
  return layers.empty() ? 0 : layers.back().out_width();
}

std::size_t MlpParams::parameter_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.weight.size() + layer.bias.size();
  return n;
}

std::vector<LayerSpec> MlpParams::specs() const {
  std::vector<LayerSpec> out;
  out.reserve(layers.size());
  for (const auto& layer : layers) {
    out.push_back({layer.in_width(), layer.out_width(), layer.activation,
                   layer.has_bias});
  }
  return out;
}

MlpGradients MlpGradients::ZerosLike(const MlpParams& params) {
  MlpGradients g;
  for (const auto& layer : params.layers) {
    g.weight.emplace_back(layer.weight.rows(), layer.weight.cols());
    g.bias.emplace_back(layer.bias.size(), 0.0);
  }
  return g;
}

void ValidateSpecs(std::span<const LayerSpec> specs) {
  if (specs.empty()) throw SpecError("network needs at least one layer");
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& s = specs[k];
    if (s.in_width == 0 || s.out_width == 0) {
      throw SpecError("layer " + std::to_string(k) + " has zero width");
    }
    if (k > 0 && specs[k - 1].out_width != s.in_width) {
      throw SpecError("layer " + std::to_string(k) + " input width " +
                      std::to_string(s.in_width) + " does not match previous "
                      "output width " + std::to_string(specs[k - 1].out_width));
    }
    if (s.activation.kind == Activation::Kind::kLeakyRelu &&
        !(s.activation.slope > 0 && s.activation.slope < 1)) {
      throw SpecError("leaky-ReLU slope must lie in (0, 1)");
    }
  }
}

std::vector<LayerSpec> BuildSpecs(std::size_t in_width,
                                  std::span<const std::size_t> hidden_widths,
                                  std::span<const Activation> hidden_activations,
                                  std::size_t out_width,
                                  Activation output_activation,
                                  bool output_bias) {
  if (hidden_widths.size() != hidden_activations.size()) {
    throw SpecError("one activation per hidden layer required");
  }
  std::vector<LayerSpec> specs;
  std::size_t width = in_width;
  for (std::size_t k = 0; k < hidden_widths.size(); ++k) {
    specs.push_back({width, hidden_widths[k], hidden_activations[k], true});
    width = hidden_widths[k];
  }
  specs.push_back({width, out_width, output_activation, output_bias});
  ValidateSpecs(specs);
  return specs;
}

MlpParams XavierInit(std::span<const LayerSpec> specs, Rng& rng) {
  ValidateSpecs(specs);
  MlpParams params;
  for (const auto& s : specs) {
    DenseLayer layer;
    layer.weight = Matrix(s.out_width, s.in_width);
    const double bound =
        std::sqrt(6.0 / static_cast<double>(s.in_width + s.out_width));
    for (double& w : layer.weight.values()) {
      w = -bound + 2.0 * bound * rng.Uniform01();
    }
    if (s.has_bias) layer.bias.assign(s.out_width, 0.0);
    layer.activation = s.activation;
    layer.has_bias = s.has_bias;
    params.layers.push_back(std::move(layer));
  }
  return params;
}

namespace {

void CheckInput(const MlpParams& params, const Matrix& input) {
  if (params.layers.empty()) throw SpecError("network has no layers");
  if (input.cols() != params.in_width()) {
    throw SpecError("input has " + std::to_string(input.cols()) +
                    " columns, network expects " +
                    std::to_string(params.in_width()));
  }
}

Matrix AffineOf(const DenseLayer& layer, const Matrix& x) {
  Matrix y(x.rows(), layer.out_width());
  kernels::Active().affine(x.values().data(), layer.weight.values().data(),
                           layer.has_bias ? layer.bias.data() : nullptr,
                           y.values().data(), x.rows(), layer.in_width(),
                           layer.out_width());
  return y;
}

Matrix Activate(const Activation& act, const Matrix& pre) {
  if (act.kind == Activation::Kind::kIdentity) return pre;
  Matrix out(pre.rows(), pre.cols());
  auto src = pre.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = act.Apply(src[i]);
  return out;
}

void CheckFinite(const Matrix& output) {
  if (!output.AllFinite()) throw NumericError("network output is not finite");
}

}  // namespace

ForwardResult Forward(const MlpParams& params, const Matrix& input) {
  CheckInput(params, input);
  ForwardResult result;
  auto& cache = result.cache;
  cache.inputs.reserve(params.layers.size());
  cache.pre.reserve(params.layers.size());
  Matrix x = input;
  for (const auto& layer : params.layers) {
    Matrix pre = AffineOf(layer, x);
    Matrix act = Activate(layer.activation, pre);
    cache.inputs.push_back(std::move(x));
    cache.pre.push_back(std::move(pre));
    x = std::move(act);
  }
  CheckFinite(x);
  cache.output = x;
  result.output = std::move(x);
  return result;
}

Matrix Predict(const MlpParams& params, const Matrix& input) {
  CheckInput(params, input);
  Matrix x = input;
  for (const auto& layer : params.layers) {
    Matrix pre = AffineOf(layer, x);
    if (layer.activation.kind == Activation::Kind::kIdentity) {
      x = std::move(pre);
    } else {
      for (double& v : pre.values()) v = layer.activation.Apply(v);
      x = std::move(pre);
    }
  }
  CheckFinite(x);
  return x;
}

BackwardResult Backward(const MlpParams& params, const ForwardCache& cache,
                        const Matrix& output_grad) {
  const std::size_t depth = params.layers.size();
  if (cache.inputs.size() != depth || cache.pre.size() != depth) {
    throw SpecError("forward cache does not match the network");
  }
  if (output_grad.rows() != cache.output.rows() ||
      output_grad.cols() != cache.output.cols()) {
    throw SpecError("output gradient shape does not match network output");
  }
  const auto& kt = kernels::Active();
  BackwardResult result;
  result.params = MlpGradients::ZerosLike(params);
  Matrix upstream = output_grad;
  for (std::size_t k = depth; k-- > 0;) {
    const DenseLayer& layer = params.layers[k];
    const Matrix& pre = cache.pre[k];
    const Matrix& post = (k + 1 < depth) ? cache.inputs[k + 1] : cache.output;
    const std::size_t rows = pre.rows();

    // delta = upstream .* act'(pre)
    Matrix delta = std::move(upstream);
    if (layer.activation.kind != Activation::Kind::kIdentity) {
      auto d = delta.values();
      auto z = pre.values();
      auto y = post.values();
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] *= layer.activation.Derivative(z[i], y[i]);
      }
    }

    kt.accumulate_weight_grad(delta.values().data(),
                              cache.inputs[k].values().data(),
                              result.params.weight[k].values().data(), rows,
                              layer.in_width(), layer.out_width());
    if (layer.has_bias) {
      auto& gb = result.params.bias[k];
      for (std::size_t r = 0; r < rows; ++r) {
        auto dr = delta.row(r);
        for (std::size_t o = 0; o < gb.size(); ++o) gb[o] += dr[o];
      }
    }

    Matrix down(rows, layer.in_width());
    kt.backprop_input(delta.values().data(), layer.weight.values().data(),
                      down.values().data(), rows, layer.in_width(),
                      layer.out_width());
    upstream = std::move(down);
  }
  result.input = std::move(upstream);
  return result;
}

bool AllFinite(const MlpParams& params) {
  for (const auto& layer : params.layers) {
    if (!layer.weight.AllFinite()) return false;
    for (double b : layer.bias) {
      if (!std::isfinite(b)) return false;
    }
  }
  return true;
}

void AddInPlace(MlpGradients& acc, const MlpGradients& other) {
  if (acc.weight.size() != other.weight.size()) {
    throw SpecError("gradient sets differ in depth");
  }
  for (std::size_t k = 0; k < acc.weight.size(); ++k) {
    auto a = acc.weight[k].values();
    auto b = other.weight[k].values();
    if (a.size() != b.size() || acc.bias[k].size() != other.bias[k].size()) {
      throw SpecError("gradient shapes differ");
    }
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    for (std::size_t i = 0; i < acc.bias[k].size(); ++i) acc.bias[k][i] += other.bias[k][i];
  }
}

void BlendInto(MlpParams& avg, const MlpParams& current, double decay) {
  if (avg.layers.size() != current.layers.size()) {
    throw SpecError("BlendInto: networks differ in depth");
  }
  const double keep = 1.0 - decay;
  for (std::size_t k = 0; k < avg.layers.size(); ++k) {
    auto w = avg.layers[k].weight.values();
    const auto cw = current.layers[k].weight.values();
    auto& b = avg.layers[k].bias;
    const auto& cb = current.layers[k].bias;
    if (w.size() != cw.size() || b.size() != cb.size()) {
      throw SpecError("BlendInto: layer shapes differ");
    }
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = decay * w[i] + keep * cw[i];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = decay * b[i] + keep * cb[i];
  }
}

}  // namespace ador
