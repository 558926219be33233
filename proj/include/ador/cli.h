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


#ifndef ADOR_CLI_H_
#define ADOR_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ador/random.h"

namespace ador {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumeric = 4;

// Runs one subcommand. args[0] is the program name. Diagnostics go to err
// as a single line; reports and usage text go to out.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Noise-law text such as "exp:1", "chisq:3", "rayleigh:4", "binom:20,0.3",
// "uniform:-1,1", "normal:0,1" or "lognormal:1,0.6", optionally followed by
// a signed offset ("lognormal:1,0.6+1"). Inverse of DistSpec::ToString.
// Throws ParameterError.
DistSpec ParseDistSpec(const std::string& text);

// As ParseDistSpec, but "none" yields nullopt (noiseless responses).
std::optional<DistSpec> ParseNoise(const std::string& text);

}  // namespace ador

#endif  // ADOR_CLI_H_
