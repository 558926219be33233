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

#include "ador/direction.h"

#include <algorithm>

#include "ador/errors.h"

namespace ador {

std::string ToString(RegressionMethod m) {
  return m == RegressionMethod::kAdor ? "ador" : "adose";
}

namespace {

// FNV-1a over the column's bytes: portable, so direction seeds agree
// across standard libraries.
std::uint64_t HashColumn(std::span<const double> v) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto* bytes = reinterpret_cast<const unsigned char*>(v.data());
  for (std::size_t i = 0; i < v.size() * sizeof(double); ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Mutual information between a regressor and the residual of regressing
// `response` on it.
double ResidualDependence(std::span<const double> regressor,
                          std::span<const double> response,
                          const DirectionConfig& cfg, Rng& rng) {
  const Dataset data = MakeDataset(regressor, response);
  const std::size_t n = data.size();
  auto [train_rng, audit_rng] = rng.Split();
  MineConfig audit = cfg.audit;
  audit.batch = std::min(audit.batch, n / 4);

  if (cfg.method == RegressionMethod::kAdor) {
    AdorConfig ac = cfg.ador;
    ac.batch_half_b = std::min(ac.batch_half_b, n / 4);
    const AdorModel model = AdorTrain(data, ac, train_rng);
    return ResidualMiAudit(model, data, audit, audit_rng).mi_nats;
  }
  AdoseConfig sc = cfg.adose;
  sc.batch_b = std::min(sc.batch_b, n / 2);
  const AdoseModel model = AdoseTrain(data, sc, train_rng);
  auto [mean_rng, mi_rng] = audit_rng.Split();
  const auto fitted = ConditionalMeans(model, data.u, cfg.adose_mean_draws, mean_rng);
  std::vector<double> eps(n);
  for (std::size_t i = 0; i < n; ++i) eps[i] = data.z[i] - fitted[i];
  return EstimateMi(data.u, Matrix::Column(eps), audit, mi_rng).mi_nats;
}

}  // namespace

std::uint64_t DirectionSeed(std::uint64_t base, std::span<const double> regressor,
                            std::span<const double> response) {
  std::uint64_t h = MixSeed(base ^ HashColumn(regressor));
  return MixSeed(h ^ (HashColumn(response) * 0x9e3779b97f4a7c15ULL));
}

DirectionVerdict DirectionScore(std::span<const double> x,
                                std::span<const double> y,
                                const DirectionConfig& cfg, Rng& rng) {
  if (x.size() != y.size()) throw SpecError("direction: x and y lengths differ");
  if (x.size() < 16) throw SpecError("direction: need at least 16 samples");
  const std::uint64_t base = rng.NextU64();

  DirectionVerdict v;
  try {
    Rng forward_rng(DirectionSeed(base, x, y));
    v.mi_forward = ResidualDependence(x, y, cfg, forward_rng);
  } catch (const NumericError& e) {
    throw NumericError(std::string("direction x->y failed: ") + e.what());
  }
  try {
    Rng backward_rng(DirectionSeed(base, y, x));
    v.mi_backward = ResidualDependence(y, x, cfg, backward_rng);
  } catch (const NumericError& e) {
    throw NumericError(std::string("direction y->x failed: ") + e.what());
  }
  v.score_s = v.mi_backward - v.mi_forward;
  v.verdict = v.score_s > 0 ? CausalDirection::kXtoY : CausalDirection::kYtoX;
  v.low_confidence = std::abs(v.score_s) < cfg.low_confidence_threshold;
  return v;
}

}  // namespace ador
