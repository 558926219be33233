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

#ifndef ADOR_METRICS_H_
#define ADOR_METRICS_H_

#include <span>
#include <string>
#include <vector>

namespace ador {

struct PointwiseErrors {
  double mse = 0.0;
  double mae = 0.0;
};

// Mean squared and mean absolute difference. Throws SpecError on empty or
// mismatched inputs.
PointwiseErrors ComputePointwiseErrors(std::span<const double> pred,
                                       std::span<const double> resp);

// Integral squared error between two curves sampled on a strictly
// increasing grid of >= 3 points. Both curves are first shifted to zero
// integral mean over the grid, so a pure constant offset scores 0; the
// integral is the trapezoid rule.
double IntegratedSquaredError(std::span<const double> f_hat,
                              std::span<const double> f_true,
                              std::span<const double> grid);

// n equally spaced points on [lo, hi].
std::vector<double> UniformGrid(double lo, double hi, std::size_t n);

struct MetricRow {
  std::string method;
  double mse = 0.0;
  double mae = 0.0;
  double ise = 0.0;
};

}  // namespace ador

#endif  // ADOR_METRICS_H_
