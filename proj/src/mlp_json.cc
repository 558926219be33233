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

#include "ador/mlp_json.h"

#include <string>
#include <vector>

#include "ador/errors.h"

namespace ador {

nlohmann::json MlpToJson(const MlpParams& params) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : params.layers) {
    const auto w = layer.weight.values();
    layers.push_back({
        {"in", layer.in_width()},
        {"out", layer.out_width()},
        {"activation", ToString(layer.activation.kind)},
        {"slope", layer.activation.slope},
        {"has_bias", layer.has_bias},
        {"weight", std::vector<double>(w.begin(), w.end())},
        {"bias", layer.bias},
    });
  }
  return {{"layers", std::move(layers)}};
}

MlpParams MlpFromJson(const nlohmann::json& doc) {
  MlpParams params;
  try {
    std::vector<LayerSpec> specs;
    for (const auto& entry : doc.at("layers")) {
      DenseLayer layer;
      const auto in = entry.at("in").get<std::size_t>();
      const auto out = entry.at("out").get<std::size_t>();
      layer.activation.kind =
          ActivationKindFromString(entry.at("activation").get<std::string>());
      layer.activation.slope = entry.value("slope", 0.2);
      layer.has_bias = entry.at("has_bias").get<bool>();
      layer.weight = Matrix(out, in, entry.at("weight").get<std::vector<double>>());
      layer.bias = entry.at("bias").get<std::vector<double>>();
      if (layer.bias.size() != (layer.has_bias ? out : 0)) {
        throw DataError("bias length does not match layer width");
      }
      specs.push_back({in, out, layer.activation, layer.has_bias});
      params.layers.push_back(std::move(layer));
    }
    ValidateSpecs(specs);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed network document: ") + e.what());
  } catch (const SpecError& e) {
    throw DataError(std::string("malformed network document: ") + e.what());
  }
  if (!AllFinite(params)) throw DataError("network document has non-finite values");
  return params;
}

}  // namespace ador
