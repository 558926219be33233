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

#ifndef ADOR_MLP_JSON_H_
#define ADOR_MLP_JSON_H_

#include "json.hpp"

#include "ador/mlp.h"

namespace ador {

// {"layers": [{"in", "out", "activation", "slope", "has_bias", "weight",
// "bias"}]}; weights are flat row-major arrays.
nlohmann::json MlpToJson(const MlpParams& params);
// Throws DataError on malformed documents.
MlpParams MlpFromJson(const nlohmann::json& doc);

}  // namespace ador

#endif  // ADOR_MLP_JSON_H_
