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

#include "ador/errors.h"

namespace ador {
namespace {

std::string WithIteration(const std::string& what,
                          std::optional<std::uint64_t> iteration) {
  if (!iteration) return what;
  return what + " (iteration " + std::to_string(*iteration) + ")";
}

}  // namespace

NumericError::NumericError(const std::string& what,
                           std::optional<std::uint64_t> iteration)
    : Error(WithIteration(what, iteration)), iteration_(iteration) {}

}  // namespace ador
