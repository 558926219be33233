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
#include <vector>

#include "ador/direction.h"
#include "ador/errors.h"
#include "doctest.h"

namespace ador {
namespace {

// Y = X^3 + Laplace(0, 0.3 scale) with X uniform on [-1, 1].
void CubicPair(std::size_t n, Rng& rng, std::vector<double>& x, std::vector<double>& y) {
  x.resize(n);
  y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -1.0 + 2.0 * rng.Uniform01();
    const double laplace = -std::log(rng.UniformOpen0()) + std::log(rng.UniformOpen0());
    y[i] = x[i] * x[i] * x[i] + 0.3 * laplace;
  }
}

DirectionConfig QuickConfig() {
  DirectionConfig cfg;
  cfg.ador.iterations = 800;
  cfg.ador.batch_half_b = 64;
  cfg.ador.r_hidden = {16, 16, 16};
  cfg.ador.mi_hidden = {16, 16, 16};
  cfg.audit.iterations = 800;
  return cfg;
}

TEST_SUITE("direction") {
  TEST_CASE("cubic additive-noise pair is oriented and swapping negates the score") {
    Rng data_rng(1);
    std::vector<double> x, y;
    CubicPair(800, data_rng, x, y);
    const DirectionConfig cfg;
    Rng a(17), b(17);
    const DirectionVerdict v = DirectionScore(x, y, cfg, a);
    const DirectionVerdict w = DirectionScore(y, x, cfg, b);
    MESSAGE("forward " << v.mi_forward << " backward " << v.mi_backward);
    CHECK(v.verdict == CausalDirection::kXtoY);
    CHECK(v.score_s > 0);
    CHECK(w.score_s == -v.score_s);
    CHECK(w.mi_forward == v.mi_backward);
    CHECK(w.verdict == CausalDirection::kYtoX);
  }

  TEST_CASE("verdict rule and low-confidence flag") {
    Rng rng(2);
    std::vector<double> x(64), y(64);
    for (std::size_t i = 0; i < 64; ++i) {
      x[i] = rng.StandardNormal();
      y[i] = rng.StandardNormal();
    }
    DirectionConfig cfg = QuickConfig();
    cfg.ador.iterations = 5;
    cfg.audit.iterations = 5;
    cfg.low_confidence_threshold = 1e9;
    const DirectionVerdict v = DirectionScore(x, y, cfg, rng);
    CHECK(v.low_confidence);
    CHECK(v.score_s == v.mi_backward - v.mi_forward);
    CHECK((v.verdict == CausalDirection::kXtoY) == (v.score_s > 0));
  }

  TEST_CASE("input checks") {
    Rng rng(3);
    const std::vector<double> a(10, 1.0), b(11, 1.0);
    CHECK_THROWS_AS(DirectionScore(a, b, DirectionConfig{}, rng), SpecError);
    CHECK_THROWS_AS(DirectionScore(a, a, DirectionConfig{}, rng), SpecError);
  }

  TEST_CASE("direction seeds depend on content and role") {
    const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
    CHECK(DirectionSeed(7, a, b) == DirectionSeed(7, a, b));
    CHECK(DirectionSeed(7, a, b) != DirectionSeed(7, b, a));
    CHECK(DirectionSeed(7, a, b) != DirectionSeed(8, a, b));
    CHECK(ToString(RegressionMethod::kAdor) == "ador");
    CHECK(ToString(RegressionMethod::kAdose) == "adose");
  }
}

}  // namespace
}  // namespace ador
