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


#ifndef ADOR_SRC_CLI_CONFIG_H_
#define ADOR_SRC_CLI_CONFIG_H_

// JSON forms of the trainer configurations and the overlay rule used to
// resolve a run configuration from defaults, a config file and flags.

#include <string>

#include "ador/adam.h"
#include "ador/ador.h"
#include "ador/adose.h"
#include "ador/baseline.h"
#include "ador/mine.h"
#include "json.hpp"

namespace ador::cli {

nlohmann::json ToJson(const AdamConfig& c);
nlohmann::json ToJson(const AdorConfig& c);
nlohmann::json ToJson(const AdoseConfig& c);
nlohmann::json ToJson(const MineConfig& c);
nlohmann::json ToJson(const MseConfig& c);

// The readers expect every key written by ToJson and throw SpecError
// otherwise.
AdamConfig AdamConfigFromJson(const nlohmann::json& j);
AdorConfig AdorConfigFromJson(const nlohmann::json& j);
AdoseConfig AdoseConfigFromJson(const nlohmann::json& j);
MineConfig MineConfigFromJson(const nlohmann::json& j);
MseConfig MseConfigFromJson(const nlohmann::json& j);

// Copies patch into base. Keys must already exist in base and values must
// keep their JSON kind (any number may replace a float; only non-negative
// integers may replace an unsigned). A null base value accepts anything.
// Throws SpecError naming the offending key path.
void Overlay(nlohmann::json& base, const nlohmann::json& patch,
             const std::string& path = "");

}  // namespace ador::cli

#endif  // ADOR_SRC_CLI_CONFIG_H_
