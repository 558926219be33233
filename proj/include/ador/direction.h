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

#ifndef ADOR_DIRECTION_H_
#define ADOR_DIRECTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "ador/ador.h"
#include "ador/adose.h"
#include "ador/mine.h"
#include "ador/pairs.h"
#include "ador/random.h"

namespace ador {

enum class RegressionMethod { kAdor, kAdose };

std::string ToString(RegressionMethod m);

struct DirectionConfig {
  RegressionMethod method = RegressionMethod::kAdor;
  AdorConfig ador;
  AdoseConfig adose;
  MineConfig audit = ResidualAuditDefaults();
  // Draws per point when AdOSE's regression function is its conditional
  // mean.
  std::size_t adose_mean_draws = 5000;
  // |S| below this is reported as undecided; the hard verdict still counts.
  double low_confidence_threshold = 0.02;
};

struct DirectionVerdict {
  double score_s = 0.0;  // mi_backward - mi_forward
  CausalDirection verdict = CausalDirection::kYtoX;
  double mi_forward = 0.0;   // MI(residual of y on x, x)
  double mi_backward = 0.0;  // MI(residual of x on y, y)
  bool low_confidence = false;
};

// Fits y on x and x on y from scratch and audits each residual with a fresh
// MINE critic; the direction whose residual carries less information about
// its regressor wins (x->y iff score_s > 0, ties go to y->x).
//
// One word is drawn from rng; each direction's stream is derived from that
// word and the contents of its (regressor, response) columns. Swapping x
// and y therefore replays the same two runs with the roles exchanged and
// exactly negates score_s.
//
// Batch sizes are reduced to n / 4 for short series. Requires n >= 16;
// a training failure is rethrown naming the direction.
DirectionVerdict DirectionScore(std::span<const double> x,
                                std::span<const double> y,
                                const DirectionConfig& cfg, Rng& rng);

// Seed for regressing `response` on `regressor`.
std::uint64_t DirectionSeed(std::uint64_t base, std::span<const double> regressor,
                            std::span<const double> response);

}  // namespace ador

#endif  // ADOR_DIRECTION_H_
