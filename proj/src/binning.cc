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

#include "ador/binning.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ador/errors.h"

namespace ador {
namespace {

std::vector<double> Edges(double lo, double hi, std::size_t bins) {
  if (!(hi > lo)) {
    // Degenerate range: a unit-wide window centred on the value.
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  edges.back() = hi;
  return edges;
}

std::size_t BinOf(const std::vector<double>& edges, double v) {
  const std::size_t bins = edges.size() - 1;
  if (v <= edges.front()) return 0;
  if (v >= edges.back()) return bins - 1;
  const double width = (edges.back() - edges.front()) / static_cast<double>(bins);
  auto k = static_cast<std::size_t>((v - edges.front()) / width);
  return std::min(k, bins - 1);
}

}  // namespace

double BinGrid::z_width() const {
  return (z_edges.back() - z_edges.front()) / static_cast<double>(z_bins());
}

BinGrid MakeBinGrid(std::span<const double> u, std::span<const double> z,
                    std::size_t u_bins, std::size_t z_bins) {
  if (u.empty() || z.empty()) throw SpecError("binning needs samples");
  if (u_bins < 2 || z_bins < 2) throw SpecError("binning needs at least 2 bins per axis");
  const auto [ulo, uhi] = std::minmax_element(u.begin(), u.end());
  const auto [zlo, zhi] = std::minmax_element(z.begin(), z.end());
  return {Edges(*ulo, *uhi, u_bins), Edges(*zlo, *zhi, z_bins)};
}

BinnedConditional BinConditional(std::span<const double> u,
                                 std::span<const double> z, const BinGrid& grid) {
  if (u.size() != z.size()) throw SpecError("binning: u and z lengths differ");
  if (u.empty()) throw SpecError("binning needs samples");
  if (grid.u_edges.size() < 3 || grid.z_edges.size() < 3) {
    throw SpecError("binning needs at least 2 bins per axis");
  }
  BinnedConditional out;
  out.grid = grid;
  const std::size_t ub = grid.u_bins();
  const std::size_t zb = grid.z_bins();
  out.density = Matrix(ub, zb);
  out.row_counts.assign(ub, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t r = BinOf(grid.u_edges, u[i]);
    const std::size_t c = BinOf(grid.z_edges, z[i]);
    out.density(r, c) += 1.0;
    out.row_counts[r] += 1;
  }
  const double dz = grid.z_width();
  for (std::size_t r = 0; r < ub; ++r) {
    if (out.row_counts[r] == 0) continue;
    const double norm = static_cast<double>(out.row_counts[r]) * dz;
    for (double& v : out.density.row(r)) v /= norm;
  }
  out.u_grid.resize(ub);
  for (std::size_t r = 0; r < ub; ++r) {
    out.u_grid[r] = 0.5 * (grid.u_edges[r] + grid.u_edges[r + 1]);
  }
  return out;
}

BinnedConditional BinConditional(std::span<const double> u,
                                 std::span<const double> z, std::size_t u_bins,
                                 std::size_t z_bins) {
  return BinConditional(u, z, MakeBinGrid(u, z, u_bins, z_bins));
}

double ConditionalL1(const BinnedConditional& a, const BinnedConditional& b) {
  if (a.grid.u_edges != b.grid.u_edges || a.grid.z_edges != b.grid.z_edges) {
    throw SpecError("conditional L1 needs identical grids");
  }
  const double dz = a.grid.z_width();
  double total = 0.0;
  std::size_t rows = 0;
  for (std::size_t r = 0; r < a.density.rows(); ++r) {
    if (a.row_empty(r) || b.row_empty(r)) continue;
    double l1 = 0.0;
    auto ra = a.density.row(r);
    auto rb = b.density.row(r);
    for (std::size_t c = 0; c < ra.size(); ++c) l1 += std::abs(ra[c] - rb[c]);
    total += l1 * dz;
    ++rows;
  }
  if (rows == 0) throw SpecError("conditional L1: no u-row is populated in both");
  return total / static_cast<double>(rows);
}

std::string BinnedToCsv(const BinnedConditional& binned) {
  std::string out = "u,z,density\n";
  char buf[96];
  const auto& ze = binned.grid.z_edges;
  for (std::size_t r = 0; r < binned.density.rows(); ++r) {
    for (std::size_t c = 0; c < binned.density.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g\n", binned.u_grid[r],
                    0.5 * (ze[c] + ze[c + 1]), binned.density(r, c));
      out += buf;
    }
  }
  return out;
}

}  // namespace ador
