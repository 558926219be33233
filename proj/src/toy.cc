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

#include "ador/toy.h"

#include <cmath>
#include <numbers>

#include "ador/errors.h"

namespace ador {

double ToyFunction::operator()(double x) const {
  switch (kind) {
    case Kind::kSquare:
      return x * x;
    case Kind::kSinPi:
      return std::sin(std::numbers::pi * x);
    case Kind::kExp2:
      return std::exp(2.0 * x);
    case Kind::kSigmoid5:
      return 1.0 / (1.0 + std::exp(-5.0 * x));
    case Kind::kCube:
      return x * x * x;
    case Kind::kLinear:
      return slope * x;
  }
  return x;
}

std::vector<double> ToyFunction::Evaluate(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
  return out;
}

std::string ToyFunction::Name() const {
  switch (kind) {
    case Kind::kSquare:
      return "square";
    case Kind::kSinPi:
      return "sin";
    case Kind::kExp2:
      return "exp2";
    case Kind::kSigmoid5:
      return "sigmoid5";
    case Kind::kCube:
      return "cube";
    case Kind::kLinear:
      return "linear:" + std::to_string(slope);
  }
  return "unknown";
}

ToyFunction ParseToyFunction(const std::string& text) {
  if (text == "square") return {ToyFunction::Kind::kSquare};
  if (text == "sin") return {ToyFunction::Kind::kSinPi};
  if (text == "exp2") return {ToyFunction::Kind::kExp2};
  if (text == "sigmoid5") return {ToyFunction::Kind::kSigmoid5};
  if (text == "cube") return {ToyFunction::Kind::kCube};
  if (text == "linear") return {ToyFunction::Kind::kLinear, 1.0};
  if (text.rfind("linear:", 0) == 0) {
    try {
      return {ToyFunction::Kind::kLinear, std::stod(text.substr(7))};
    } catch (const std::exception&) {
    }
  }
  throw ParameterError("unknown toy function '" + text + "'");
}

ToyData GenerateToy(const ToySpec& spec, Rng& rng) {
  if (spec.n < 10) throw ParameterError("toy datasets need n >= 10");
  if (spec.noise) spec.noise->Validate();
  const auto x = Sample(DistSpec::MakeUniform(-1.0, 1.0), spec.n, rng);
  std::vector<double> z = spec.f.Evaluate(x);
  if (spec.noise) {
    const auto eps = Sample(*spec.noise, spec.n, rng);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += eps[i];
  }
  std::string name = spec.f.Name() + "/" +
                     (spec.noise ? spec.noise->ToString() : std::string("none"));
  return {MakeDataset(x, z, std::move(name)), spec.f};
}

DistSpec NonadditiveRegressorLaw() {
  return DistSpec::MakeShifted(DistSpec::MakeLogNormal(1.0, 0.6), 1.0);
}

std::vector<double> SampleNonadditiveResponse(std::span<const double> u, Rng& rng) {
  std::vector<double> z(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    z[i] = (-1.0 + 2.0 * rng.Uniform01()) * u[i];
  }
  return z;
}

Dataset GenerateNonadditive(std::size_t n, Rng& rng) {
  if (n < 10) throw ParameterError("non-additive dataset needs n >= 10");
  const auto u = Sample(NonadditiveRegressorLaw(), n, rng);
  const auto z = SampleNonadditiveResponse(u, rng);
  return MakeDataset(u, z, "nonadditive");
}

}  // namespace ador
