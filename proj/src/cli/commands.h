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


#ifndef ADOR_SRC_CLI_COMMANDS_H_
#define ADOR_SRC_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ador/random.h"
#include "json.hpp"

namespace ador::cli {

// Subcommand names in help order.
const std::vector<std::string>& CommandNames();

// Fully populated configuration for a subcommand; flags and config files
// may only override keys present here.
nlohmann::json DefaultConfig(const std::string& command);

// Runs a subcommand on a resolved configuration. Writes artifacts under
// config["out"] and a short JSON summary to out. Errors propagate as the
// library's exception types.
void Execute(const nlohmann::json& config, std::ostream& out);

// Independent stream for one named unit of work (a benchmark cell or a
// pair). Depends only on the run seed and the label, so the result of a
// unit does not change when other units are added or removed.
Rng LabelledRng(std::uint64_t seed, const std::string& label);

}  // namespace ador::cli

#endif  // ADOR_SRC_CLI_COMMANDS_H_
