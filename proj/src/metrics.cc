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

#include "ador/metrics.h"

#include <cmath>

#include "ador/errors.h"

namespace ador {

PointwiseErrors ComputePointwiseErrors(std::span<const double> pred,
                                       std::span<const double> resp) {
  if (pred.size() != resp.size()) throw SpecError("prediction/response length mismatch");
  if (pred.empty()) throw SpecError("need at least one prediction");
  PointwiseErrors e;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - resp[i];
    e.mse += d * d;
    e.mae += std::abs(d);
  }
  e.mse /= static_cast<double>(pred.size());
  e.mae /= static_cast<double>(pred.size());
  return e;
}

namespace {

double Trapezoid(std::span<const double> y, std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  }
  return sum;
}

}  // namespace

double IntegratedSquaredError(std::span<const double> f_hat,
                              std::span<const double> f_true,
                              std::span<const double> grid) {
  if (grid.size() < 3) throw SpecError("ISE grid needs at least 3 points");
  if (f_hat.size() != grid.size() || f_true.size() != grid.size()) {
    throw SpecError("ISE curves and grid differ in length");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw SpecError("ISE grid must be strictly increasing");
  }
  // The best constant offset in L2 is the integral mean of the difference.
  std::vector<double> diff(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) diff[i] = f_hat[i] - f_true[i];
  const double width = grid.back() - grid.front();
  const double offset = Trapezoid(diff, grid) / width;
  for (double& d : diff) d = (d - offset) * (d - offset);
  return Trapezoid(diff, grid);
}

std::vector<double> UniformGrid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) throw SpecError("UniformGrid needs n >= 2 and hi > lo");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  g.back() = hi;
  return g;
}

}  // namespace ador
