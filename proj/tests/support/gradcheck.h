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


#ifndef ADOR_TESTS_SUPPORT_GRADCHECK_H_
#define ADOR_TESTS_SUPPORT_GRADCHECK_H_

// Central-difference gradient checker shared by the unit tests and the
// acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ador/activation.h"
#include "ador/matrix.h"
#include "ador/mlp.h"
#include "ador/random.h"

namespace ador::testing {

// Random network of 1..max_layers dense layers. Layer k of network `index`
// uses activation kind (index + k) % 4, so a run over several indices sees
// every kind; widths are drawn from [1, 6] and biases are dropped at random.
inline MlpParams RandomMlp(Rng& rng, std::size_t index, std::size_t max_layers = 4) {
  const Activation::Kind kinds[] = {Activation::Kind::kTanh, Activation::Kind::kSigmoid,
                                    Activation::Kind::kLeakyRelu, Activation::Kind::kIdentity};
  const std::size_t layers = 1 + rng.UniformIndex(max_layers);
  std::vector<LayerSpec> specs;
  std::size_t in = 1 + rng.UniformIndex(6);
  for (std::size_t k = 0; k < layers; ++k) {
    const std::size_t out = k + 1 == layers ? 1 + rng.UniformIndex(3) : 1 + rng.UniformIndex(6);
    Activation act{kinds[(index + k) % 4], 0.05 + 0.9 * rng.Uniform01()};
    specs.push_back({in, out, act, rng.Uniform01() < 0.7});
    in = out;
  }
  MlpParams params = XavierInit(specs, rng);
  // Non-zero biases so the bias gradient path is exercised.
  for (DenseLayer& layer : params.layers) {
    for (double& b : layer.bias) b = rng.StandardNormal() * 0.5;
  }
  return params;
}

// Scalar probe loss sum(output .* g).
inline double ProbeLoss(const MlpParams& p, const Matrix& x, const Matrix& g) {
  const Matrix y = Predict(p, x);
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += y.values()[i] * g.values()[i];
  return s;
}

// Signs of every leaky-ReLU pre-activation; a change between the two probe
// points means the difference quotient straddles a kink.
inline std::vector<bool> KinkPattern(const MlpParams& p, const Matrix& x) {
  const ForwardResult f = Forward(p, x);
  std::vector<bool> signs;
  for (std::size_t k = 0; k < p.layers.size(); ++k) {
    if (p.layers[k].activation.kind != Activation::Kind::kLeakyRelu) continue;
    for (double v : f.cache.pre[k].values()) signs.push_back(v > 0);
  }
  return signs;
}

// |a - n| / max(|a|, |n|), with the denominator floored at `floor` so that
// entries that are zero up to rounding compare absolutely.
inline double RelativeError(double a, double n, double floor = 1e-7) {
  return std::abs(a - n) / std::max({std::abs(a), std::abs(n), floor});
}

struct GradCheck {
  double max_param_rel = 0.0;
  double max_input_rel = 0.0;
  std::size_t checked = 0;
  std::size_t skipped_kinks = 0;
};

inline GradCheck CheckGradients(const MlpParams& params, const Matrix& x, const Matrix& g,
                                double h = 1e-5) {
  const ForwardResult f = Forward(params, x);
  const BackwardResult b = Backward(params, f.cache, g);
  GradCheck out;

  auto probe = [&](double& slot, double analytic, double& worst, const auto& eval) {
    const double orig = slot;
    slot = orig + h;
    const auto kinks_plus = eval.pattern();
    const double lp = eval.loss();
    slot = orig - h;
    const auto kinks_minus = eval.pattern();
    const double lm = eval.loss();
    slot = orig;
    if (kinks_plus != kinks_minus) {
      ++out.skipped_kinks;
      return;
    }
    worst = std::max(worst, RelativeError(analytic, (lp - lm) / (2 * h)));
    ++out.checked;
  };

  MlpParams p = params;
  struct ParamEval {
    const MlpParams& p;
    const Matrix& x;
    const Matrix& g;
    double loss() const { return ProbeLoss(p, x, g); }
    std::vector<bool> pattern() const { return KinkPattern(p, x); }
  } param_eval{p, x, g};
  for (std::size_t k = 0; k < p.layers.size(); ++k) {
    auto w = p.layers[k].weight.values();
    for (std::size_t i = 0; i < w.size(); ++i) {
      probe(w[i], b.params.weight[k].values()[i], out.max_param_rel,
            param_eval);
    }
    auto& bias = p.layers[k].bias;
    for (std::size_t i = 0; i < bias.size(); ++i) {
      probe(bias[i], b.params.bias[k][i], out.max_param_rel, param_eval);
    }
  }

  Matrix xi = x;
  struct InputEval {
    const MlpParams& p;
    const Matrix& x;
    const Matrix& g;
    double loss() const { return ProbeLoss(p, x, g); }
    std::vector<bool> pattern() const { return KinkPattern(p, x); }
  } input_eval{params, xi, g};
  for (std::size_t i = 0; i < xi.size(); ++i) {
    probe(xi.values()[i], b.input.values()[i], out.max_input_rel,
          input_eval);
  }
  return out;
}

}  // namespace ador::testing

#endif  // ADOR_TESTS_SUPPORT_GRADCHECK_H_
