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

#include "ador/train_report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ador/errors.h"
#include "ador/format.h"

namespace ador {

double TailMean(const std::vector<double>& values, double fraction) {
  if (values.empty()) return 0.0;
  const auto n = values.size();
  auto window = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
  window = std::clamp<std::size_t>(window, 1, n);
  double sum = 0.0;
  for (std::size_t i = n - window; i < n; ++i) sum += values[i];
  return sum / static_cast<double>(window);
}

nlohmann::json ReportToJson(const TrainReport& report, bool include_timing) {
  nlohmann::json doc = {
      {"seed", report.seed},
      {"iterations", report.loss_curve.size()},
      {"final_divergence", report.final_divergence},
      {"loss_curve", report.loss_curve},
  };
  if (!report.regression_steps.empty()) {
    doc["regression_steps"] = report.regression_steps;
    doc["critic_steps"] = report.critic_steps;
  }
  if (include_timing) doc["wall_ms"] = report.wall_ms;
  return doc;
}

TrainReport ReportFromJson(const nlohmann::json& doc) {
  TrainReport report;
  try {
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.final_divergence = doc.at("final_divergence").get<double>();
    report.loss_curve = doc.at("loss_curve").get<std::vector<double>>();
    report.wall_ms = doc.value("wall_ms", 0.0);
    if (doc.contains("regression_steps")) {
      report.regression_steps = doc.at("regression_steps").get<std::vector<int>>();
      report.critic_steps = doc.at("critic_steps").get<std::vector<int>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed train report: ") + e.what());
  }
  return report;
}

std::string LossCurveCsv(const std::vector<double>& loss_curve) {
  std::string out = "iteration,loss\n";
  for (std::size_t i = 0; i < loss_curve.size(); ++i) {
    out += std::to_string(i) + "," + FormatShortest(loss_curve[i]) + "\n";
  }
  return out;
}

}  // namespace ador
