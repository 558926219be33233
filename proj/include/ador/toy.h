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

#ifndef ADOR_TOY_H_
#define ADOR_TOY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ador/dataset.h"
#include "ador/random.h"

namespace ador {

// Regression functions used by the synthetic benchmarks.
struct ToyFunction {
  enum class Kind { kSquare, kSinPi, kExp2, kSigmoid5, kCube, kLinear };
  Kind kind = Kind::kSquare;
  double slope = 1.0;  // kLinear only

  double operator()(double x) const;
  std::vector<double> Evaluate(std::span<const double> xs) const;
  std::string Name() const;
};

// "square", "sin", "exp2", "sigmoid5", "cube", "linear[:slope]".
// Throws ParameterError.
ToyFunction ParseToyFunction(const std::string& text);

struct ToySpec {
  ToyFunction f;
  // nullopt means noiseless responses.
  std::optional<DistSpec> noise;
  std::size_t n = 300;
};

struct ToyData {
  Dataset data;
  ToyFunction truth;  // noiseless reference for ISE
};

// X ~ Uniform(-1, 1), Z = f(X) + noise. All X are drawn before any noise.
// Throws ParameterError for invalid noise or n < 10.
ToyData GenerateToy(const ToySpec& spec, Rng& rng);

// The regressor law of the non-additive benchmark: LogNormal(1, 0.6) + 1.
DistSpec NonadditiveRegressorLaw();

// Z = eps * U with U ~ LogNormal(1, 0.6) + 1 and eps ~ Uniform(-1, 1).
// All U are drawn before any eps.
Dataset GenerateNonadditive(std::size_t n, Rng& rng);

// One response of the non-additive model for each given u.
std::vector<double> SampleNonadditiveResponse(std::span<const double> u, Rng& rng);

}  // namespace ador

#endif  // ADOR_TOY_H_
