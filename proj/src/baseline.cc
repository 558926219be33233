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

#include "ador/baseline.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ador/ador.h"
#include "ador/errors.h"

namespace ador {

MseFit FitMseBaseline(const Dataset& data, const MseConfig& cfg, Rng& rng) {
  data.Validate();
  if (cfg.iterations < 1 || cfg.batch < 1) {
    throw ParameterError("MSE baseline: iterations and batch must be >= 1");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = data.size();
  const std::size_t batch = std::min(cfg.batch, n);

  MseFit fit;
  if (cfg.standardize) {
    fit.scaling = FitStandardizer(data);
  } else {
    fit.scaling.u_mean.assign(data.dim(), 0.0);
    fit.scaling.u_scale.assign(data.dim(), 1.0);
    fit.scaling.u_degenerate.assign(data.dim(), false);
  }
  const Matrix us = fit.scaling.ApplyU(data.u);
  const std::vector<double> zs = fit.scaling.ApplyZ(data.z);

  fit.report.seed = rng.seed();
  fit.params = XavierInit(RegressionSpecs(data.dim(), cfg.hidden, cfg.leaky_slope, false), rng);
  AdamState adam = AdamState::For(fit.params, cfg.adam);
  Matrix grad(batch, 1);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    const auto idx = SampleWithoutReplacement(n, batch, rng);
    const Matrix ub = SelectRows(us, idx);
    ForwardResult fr;
    try {
      fr = Forward(fit.params, ub);
    } catch (const NumericError& e) {
      throw NumericError(std::string("MSE baseline diverged: ") + e.what(), it);
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < batch; ++i) {
      const double r = fr.output(i, 0) - zs[idx[i]];
      loss += r * r;
      grad(i, 0) = 2.0 * r / static_cast<double>(batch);
    }
    loss /= static_cast<double>(batch);
    if (!std::isfinite(loss)) throw NumericError("MSE baseline loss is not finite", it);
    fit.report.loss_curve.push_back(loss);
    const BackwardResult br = Backward(fit.params, fr.cache, grad);
    AdamStep(fit.params, br.params, adam, Direction::kDescend);
  }
  fit.report.final_divergence = TailMean(fit.report.loss_curve, cfg.smoothing_fraction);
  fit.report.wall_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return fit;
}

std::vector<double> MsePredict(const MseFit& fit, const Matrix& u) {
  if (u.cols() != fit.params.in_width()) throw SpecError("MsePredict: width mismatch");
  if (u.rows() == 0) return {};
  const Matrix out = Predict(fit.params, fit.scaling.ApplyU(u));
  return fit.scaling.InvertZ(out.values());
}

}  // namespace ador
