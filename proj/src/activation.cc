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

#include "ador/activation.h"

#include <cmath>

#include "ador/errors.h"

namespace ador {

double Activation::Apply(double x) const {
  switch (kind) {
    case Kind::kTanh:
      return std::tanh(x);
    case Kind::kSigmoid:
      // Split on sign so exp never overflows.
      if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
      {
        const double e = std::exp(x);
        return e / (1.0 + e);
      }
    case Kind::kLeakyRelu:
      return x > 0 ? x : slope * x;
    case Kind::kIdentity:
      return x;
  }
  return x;
}

double Activation::Derivative(double x, double y) const {
  switch (kind) {
    case Kind::kTanh:
      return 1.0 - y * y;
    case Kind::kSigmoid:
      return y * (1.0 - y);
    case Kind::kLeakyRelu:
      return x > 0 ? 1.0 : slope;
    case Kind::kIdentity:
      return 1.0;
  }
  return 1.0;
}

std::string ToString(Activation::Kind kind) {
  switch (kind) {
    case Activation::Kind::kTanh:
      return "tanh";
    case Activation::Kind::kSigmoid:
      return "sigmoid";
    case Activation::Kind::kLeakyRelu:
      return "leaky_relu";
    case Activation::Kind::kIdentity:
      return "identity";
  }
  return "identity";
}

Activation::Kind ActivationKindFromString(const std::string& name) {
  if (name == "tanh") return Activation::Kind::kTanh;
  if (name == "sigmoid") return Activation::Kind::kSigmoid;
  if (name == "leaky_relu") return Activation::Kind::kLeakyRelu;
  if (name == "identity") return Activation::Kind::kIdentity;
  throw ParameterError("unknown activation '" + name + "'");
}

}  // namespace ador
