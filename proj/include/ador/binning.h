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

#ifndef ADOR_BINNING_H_
#define ADOR_BINNING_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ador/matrix.h"

namespace ador {

// Equal-width bin edges for u and z.
struct BinGrid {
  std::vector<double> u_edges;  // u_bins + 1 entries
  std::vector<double> z_edges;  // z_bins + 1 entries

  std::size_t u_bins() const { return u_edges.size() - 1; }
  std::size_t z_bins() const { return z_edges.size() - 1; }
  double z_width() const;
};

// Grid spanning the empirical ranges of u and z. Throws SpecError when the
// samples are empty or either count is < 2.
BinGrid MakeBinGrid(std::span<const double> u, std::span<const double> z,
                    std::size_t u_bins = 40, std::size_t z_bins = 50);

// Histogram estimate of p(z | u): a 2-D histogram normalized per u-row so
// each non-empty row integrates to 1 over z. Rows without samples stay zero
// and are flagged by row_counts == 0.
struct BinnedConditional {
  std::vector<double> u_grid;  // u-bin centres, increasing
  BinGrid grid;
  Matrix density;                     // u_bins x z_bins
  std::vector<std::size_t> row_counts;

  bool row_empty(std::size_t r) const { return row_counts[r] == 0; }
};

// Samples outside the grid are clamped into the nearest edge bin so every
// sample keeps its mass. Throws SpecError on empty or mismatched inputs.
BinnedConditional BinConditional(std::span<const double> u,
                                 std::span<const double> z, const BinGrid& grid);

// Convenience form on the samples' own empirical grid.
BinnedConditional BinConditional(std::span<const double> u,
                                 std::span<const double> z,
                                 std::size_t u_bins = 40, std::size_t z_bins = 50);

// Mean over u-rows non-empty in both of sum_z |p_a - p_b| * dz, in [0, 2].
// Throws SpecError when the grids differ or no row is non-empty in both.
double ConditionalL1(const BinnedConditional& a, const BinnedConditional& b);

// "u,z,density" triplets at bin centres, one line per cell.
std::string BinnedToCsv(const BinnedConditional& binned);

}  // namespace ador

#endif  // ADOR_BINNING_H_
