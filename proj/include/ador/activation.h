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

#ifndef ADOR_ACTIVATION_H_
#define ADOR_ACTIVATION_H_

#include <string>

namespace ador {

struct Activation {
  enum class Kind { kTanh, kSigmoid, kLeakyRelu, kIdentity };

  Kind kind = Kind::kIdentity;
  // Negative-side slope, used only by kLeakyRelu. Must lie in (0, 1).
  double slope = 0.2;

  static Activation Tanh() { return {Kind::kTanh, 0.2}; }
  static Activation Sigmoid() { return {Kind::kSigmoid, 0.2}; }
  static Activation LeakyRelu(double slope = 0.2) {
    return {Kind::kLeakyRelu, slope};
  }
  static Activation Identity() { return {Kind::kIdentity, 0.2}; }

  double Apply(double x) const;
  // Derivative expressed through the pre-activation x and the activation
  // value y = Apply(x). At x == 0 leaky-ReLU takes the slope branch.
  double Derivative(double x, double y) const;

  friend bool operator==(const Activation&, const Activation&) = default;
};

// "tanh", "sigmoid", "leaky_relu", "identity".
std::string ToString(Activation::Kind kind);
// Throws ParameterError on an unknown name.
Activation::Kind ActivationKindFromString(const std::string& name);

}  // namespace ador

#endif  // ADOR_ACTIVATION_H_
