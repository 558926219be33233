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

#ifndef ADOR_DATASET_H_
#define ADOR_DATASET_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ador/matrix.h"
#include "json.hpp"

namespace ador {

// Per-column affine map x -> (x - mean) / scale. Columns with zero variance
// keep scale 1 and are flagged as degenerate.
struct Standardizer {
  std::vector<double> u_mean;
  std::vector<double> u_scale;
  std::vector<bool> u_degenerate;
  double z_mean = 0.0;
  double z_scale = 1.0;
  bool z_degenerate = false;

  Matrix ApplyU(const Matrix& u) const;
  Matrix InvertU(const Matrix& u) const;
  std::vector<double> ApplyZ(std::span<const double> z) const;
  std::vector<double> InvertZ(std::span<const double> z) const;
};

// Regressors u (n x m) paired with a scalar response z (n).
struct Dataset {
  Matrix u;
  std::vector<double> z;
  // Set by Standardize: the transform that produced the current values.
  std::optional<Standardizer> standardizer;
  std::string name;

  std::size_t size() const { return z.size(); }
  std::size_t dim() const { return u.cols(); }

  // Throws SpecError for empty or mismatched data and DataError for
  // non-finite entries.
  void Validate() const;
};

Dataset MakeDataset(std::span<const double> u, std::span<const double> z,
                    std::string name = {});

// Population mean and standard deviation of every column.
Standardizer FitStandardizer(const Dataset& data);

// Returns data with zero-mean, unit-variance columns and the transform
// stored in `standardizer`.
Dataset Standardize(const Dataset& data);

// Inverts the stored transform. Data without a transform is returned as is.
Dataset Destandardize(const Dataset& data);

// CSV with header "u0,...,u{m-1},z" (or "u,z" for m == 1).
std::string DatasetToCsv(const Dataset& data);
// Accepts an optional non-numeric header line; the last column is z.
// Throws DataError naming the offending line.
Dataset DatasetFromCsv(const std::string& text, std::string name = {});

nlohmann::json StandardizerToJson(const Standardizer& s);
Standardizer StandardizerFromJson(const nlohmann::json& doc);

}  // namespace ador

#endif  // ADOR_DATASET_H_
