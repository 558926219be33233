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

#ifndef ADOR_TRAIN_REPORT_H_
#define ADOR_TRAIN_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ador {

// Auditable record of one training run.
struct TrainReport {
  std::vector<double> loss_curve;   // minibatch loss per iteration
  double final_divergence = 0.0;    // smoothed tail of loss_curve
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  // Adversarial runs record the per-iteration step counts they applied.
  std::vector<int> regression_steps;
  std::vector<int> critic_steps;
};

// Mean of the last ceil(fraction * n) entries (at least one).
double TailMean(const std::vector<double>& values, double fraction);

// wall_ms is only written when include_timing is set; every other field is
// a pure function of the inputs, so reports compare byte-for-byte across
// runs.
nlohmann::json ReportToJson(const TrainReport& report, bool include_timing);
TrainReport ReportFromJson(const nlohmann::json& doc);

// "iteration,loss" CSV with a header line.
std::string LossCurveCsv(const std::vector<double>& loss_curve);

}  // namespace ador

#endif  // ADOR_TRAIN_REPORT_H_
