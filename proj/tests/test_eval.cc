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


#include <cmath>
#include <numbers>
#include <vector>

#include "ador/aupr.h"
#include "ador/binning.h"
#include "ador/errors.h"
#include "ador/metrics.h"
#include "ador/random.h"
#include "doctest.h"

namespace ador {
namespace {

TEST_SUITE("eval") {
  TEST_CASE("pointwise errors") {
    const std::vector<double> a = {1, 2, 3}, b = {2, 2, 5};
    const PointwiseErrors e = ComputePointwiseErrors(a, b);
    CHECK(e.mse == doctest::Approx(5.0 / 3));
    CHECK(e.mae == doctest::Approx(1.0));
    const PointwiseErrors r = ComputePointwiseErrors(b, a);
    CHECK(r.mse == e.mse);
    CHECK(r.mae == e.mae);
    const PointwiseErrors h = ComputePointwiseErrors(std::vector<double>{0, 1},
                                                     std::vector<double>{1, 3});
    CHECK(h.mse == 2.5);
    CHECK(h.mae == 1.5);
    const PointwiseErrors z = ComputePointwiseErrors(a, a);
    CHECK(z.mse == 0.0);
    CHECK(z.mae == 0.0);
    CHECK_THROWS_AS(ComputePointwiseErrors(a, std::vector<double>{1}), SpecError);
    CHECK_THROWS_AS(ComputePointwiseErrors({}, {}), SpecError);
  }

  TEST_CASE("ISE ignores a constant offset") {
    const auto grid = UniformGrid(-1, 1, 201);
    std::vector<double> f(grid.size()), g(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      f[i] = grid[i] * grid[i];
      g[i] = f[i] + 3.7;
    }
    CHECK(IntegratedSquaredError(g, f, grid) < 1e-20);
    CHECK(IntegratedSquaredError(f, f, grid) == 0.0);
  }

  TEST_CASE("ISE converges under grid refinement") {
    // The centred squared difference of sin(pi x) and 0 over [-1, 1] is 1.
    for (std::size_t n : {201u, 2001u}) {
      const auto grid = UniformGrid(-1, 1, n);
      std::vector<double> f(n), zero(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(std::numbers::pi * grid[i]);
      CHECK(std::abs(IntegratedSquaredError(f, zero, grid) - 1.0) < 1e-3);
    }
    // Offset of a linear difference: x over [-1, 1] has mean 0 and ISE 2/3.
    const auto grid = UniformGrid(-1, 1, 2001);
    std::vector<double> zero(grid.size(), 0.0);
    CHECK(std::abs(IntegratedSquaredError(grid, zero, grid) - 2.0 / 3) < 1e-5);
  }

  TEST_CASE("ISE input errors") {
    const std::vector<double> g = {0, 1, 2}, bad = {0, 2, 1}, v = {1, 2, 3};
    CHECK_THROWS_AS(IntegratedSquaredError(v, v, bad), SpecError);
    CHECK_THROWS_AS(IntegratedSquaredError(v, std::vector<double>{1, 2}, g), SpecError);
    CHECK_THROWS_AS(
        IntegratedSquaredError(std::vector<double>{1, 2}, std::vector<double>{1, 2},
                               std::vector<double>{0, 1}),
        SpecError);
    CHECK_THROWS_AS(UniformGrid(1, 1, 5), SpecError);
    const auto u = UniformGrid(0, 1, 5);
    CHECK(u == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  }

  TEST_CASE("AUPR reference values") {
    CHECK(Aupr(std::vector<double>{3, 2, 1}, {true, false, true}) ==
          doctest::Approx(0.5 + 2.0 / 3 * 0.5));
    const std::vector<double> s = {0.9, 0.8, 0.7, 0.6};
    CHECK(Aupr(s, {true, false, true, false}) == doctest::Approx(0.5 + 0.5 * 2.0 / 3));
    CHECK(Aupr(s, {true, true, false, false}) == 1.0);
    CHECK(Aupr(s, {false, false, true, true}) == doctest::Approx(0.5 * (1.0 / 3 + 0.5)));
    // Ties enter together: all tied means precision equals the base rate.
    const std::vector<double> tied = {1, 1, 1, 1};
    CHECK(Aupr(tied, {true, false, false, true}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(Aupr(s, {false, false, false, false}), SpecError);
    CHECK_THROWS_AS(Aupr(s, {true}), SpecError);
  }

  TEST_CASE("AUPR lies in [0, 1] and perfect rankings score 1") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng.UniformIndex(30);
      std::vector<double> s(n);
      std::vector<bool> l(n);
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = std::round(rng.StandardNormal() * 4);
        l[i] = rng.Uniform01() < 0.5;
        any = any || l[i];
      }
      if (!any) l[0] = true;
      const double a = Aupr(s, l);
      CHECK_UNARY(a > 0.0);
      CHECK_UNARY(a <= 1.0 + 1e-12);
      std::vector<double> perfect(n);
      for (std::size_t i = 0; i < n; ++i) perfect[i] = l[i] ? 1.0 : 0.0;
      CHECK(Aupr(perfect, l) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("binned conditional rows integrate to one") {
    Rng rng(12);
    std::vector<double> u(20000), z(20000);
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = rng.Uniform01();
      z[i] = u[i] + rng.StandardNormal();
    }
    const BinnedConditional b = BinConditional(u, z, 10, 30);
    CHECK(b.density.rows() == 10);
    CHECK(b.density.cols() == 30);
    std::size_t total = 0;
    for (std::size_t r = 0; r < 10; ++r) {
      total += b.row_counts[r];
      if (b.row_empty(r)) continue;
      double sum = 0.0;
      for (double d : b.density.row(r)) sum += d * b.grid.z_width();
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(b.u_grid[r] > b.grid.u_edges[r]);
      CHECK(b.u_grid[r] < b.grid.u_edges[r + 1]);
    }
    CHECK(total == u.size());
    CHECK(ConditionalL1(b, b) == 0.0);
    CHECK_FALSE(BinnedToCsv(b).empty());
  }

  TEST_CASE("out-of-range samples are clamped into edge bins") {
    const std::vector<double> u = {0, 1, 0.5}, z = {0, 1, 0.5};
    const BinGrid grid = MakeBinGrid(u, z, 2, 2);
    const std::vector<double> u2 = {-5, 5}, z2 = {-5, 5};
    const BinnedConditional b = BinConditional(u2, z2, grid);
    CHECK(b.row_counts[0] == 1);
    CHECK(b.row_counts[1] == 1);
    CHECK(b.density(0, 0) > 0.0);
    CHECK(b.density(1, 1) > 0.0);
  }

  TEST_CASE("conditional L1 of disjoint rows is 2") {
    const std::vector<double> u = {0, 0, 1, 1}, za = {0, 0, 0, 0}, zb = {1, 1, 1, 1};
    const BinGrid grid = MakeBinGrid(u, std::vector<double>{0, 1}, 2, 2);
    const auto a = BinConditional(u, za, grid), b = BinConditional(u, zb, grid);
    CHECK(ConditionalL1(a, b) == doctest::Approx(2.0));
    CHECK(ConditionalL1(b, a) == ConditionalL1(a, b));
  }

  TEST_CASE("binning errors") {
    const std::vector<double> u = {0, 1}, z = {0, 1};
    CHECK_THROWS_AS(MakeBinGrid({}, {}, 4, 4), SpecError);
    CHECK_THROWS_AS(MakeBinGrid(u, z, 1, 4), SpecError);
    CHECK_THROWS_AS(BinConditional(u, std::vector<double>{1}, 2, 2), SpecError);
    const auto a = BinConditional(u, z, 2, 2);
    const auto b = BinConditional(u, z, 2, 3);
    CHECK_THROWS_AS(ConditionalL1(a, b), SpecError);
  }
}

}  // namespace
}  // namespace ador
