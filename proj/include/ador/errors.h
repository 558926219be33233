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

#ifndef ADOR_ERRORS_H_
#define ADOR_ERRORS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ador {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated shape or call contract (mismatched widths, too-small batches...).
class SpecError : public Error {
 public:
  using Error::Error;
};

// Invalid distribution or hyperparameter value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed or unusable input data (files, metadata).
class DataError : public Error {
 public:
  using Error::Error;
};

// Non-finite value produced during training or inference.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what,
                        std::optional<std::uint64_t> iteration = std::nullopt);

  std::optional<std::uint64_t> iteration() const { return iteration_; }

 private:
  std::optional<std::uint64_t> iteration_;
};

}  // namespace ador

#endif  // ADOR_ERRORS_H_
