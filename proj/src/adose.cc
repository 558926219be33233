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

#include "ador/adose.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ador/ador.h"
#include "ador/errors.h"
#include "ador/mine.h"
#include "ador/mlp_json.h"

namespace ador {

void AdoseConfig::Validate() const {
  if (batch_b < 2) throw ParameterError("AdOSE: batch_b must be >= 2");
  if (iterations < 1) throw ParameterError("AdOSE: iterations must be >= 1");
  if (step_min < 1 || step_max < step_min) {
    throw ParameterError("AdOSE: need 1 <= step_min <= step_max");
  }
  if (!std::isfinite(feedback_a) || !std::isfinite(feedback_b)) {
    throw ParameterError("AdOSE: feedback coefficients must be finite");
  }
  if (rantrans_hidden < 1) throw ParameterError("AdOSE: RanTrans needs a hidden unit");
  if (!(smoothing_fraction > 0 && smoothing_fraction <= 1)) {
    throw ParameterError("AdOSE: smoothing_fraction must lie in (0, 1]");
  }
}

StepCounts FeedbackSteps(double loss, const AdoseConfig& cfg) {
  auto clamp_steps = [&](double v) {
    const double f = std::floor(v);
    if (f <= cfg.step_min) return cfg.step_min;
    if (f >= cfg.step_max) return cfg.step_max;
    return static_cast<int>(f);
  };
  return {clamp_steps(cfg.feedback_a + cfg.feedback_b * loss),
          clamp_steps(cfg.feedback_a - cfg.feedback_b * loss)};
}

std::vector<LayerSpec> RanTransSpecs(std::size_t hidden, double leaky_slope) {
  const std::size_t widths[] = {hidden};
  const Activation acts[] = {Activation::LeakyRelu(leaky_slope)};
  return BuildSpecs(1, widths, acts, 1, Activation::Identity(), true);
}

namespace {

Matrix GaussianColumn(std::size_t n, Rng& rng) {
  Matrix g(n, 1);
  for (double& v : g.values()) v = rng.StandardNormal();
  return g;
}

Matrix WithLastColumn(const Matrix& u, const Matrix& last) {
  return ConcatColumns(u, last);
}

// One generator evaluation retaining what the backward pass needs.
struct GeneratorPass {
  ForwardResult rantrans;
  ForwardResult r;
};

GeneratorPass RunGenerator(const AdoseModel& model, const Matrix& ub,
                           const Matrix& noise) {
  GeneratorPass g;
  g.rantrans = Forward(model.rantrans, noise);
  g.r = Forward(model.r, WithLastColumn(ub, g.rantrans.output));
  return g;
}

}  // namespace

AdoseModel AdoseTrain(const Dataset& data, const AdoseConfig& cfg, Rng& rng) {
  cfg.Validate();
  data.Validate();
  const std::size_t n = data.size();
  const std::size_t b = cfg.batch_b;
  const std::size_t m = data.dim();
  if (n < b) {
    throw SpecError("AdOSE: dataset has " + std::to_string(n) + " rows, needs >= " +
                    std::to_string(b));
  }
  const auto start = std::chrono::steady_clock::now();

  AdoseModel model;
  if (cfg.standardize) {
    model.scaling = FitStandardizer(data);
  } else {
    model.scaling.u_mean.assign(m, 0.0);
    model.scaling.u_scale.assign(m, 1.0);
    model.scaling.u_degenerate.assign(m, false);
  }
  const Matrix us = model.scaling.ApplyU(data.u);
  const std::vector<double> zs = model.scaling.ApplyZ(data.z);

  model.report.seed = rng.seed();
  model.r = XavierInit(RegressionSpecs(m + 1, cfg.r_hidden, cfg.leaky_slope, true), rng);
  model.rantrans = XavierInit(RanTransSpecs(cfg.rantrans_hidden, cfg.leaky_slope), rng);
  model.kl = XavierInit(CriticSpecs(m + 1, cfg.kl_hidden, cfg.leaky_slope), rng);
  AdamState r_adam = AdamState::For(model.r, cfg.r_adam);
  AdamState rt_adam = AdamState::For(model.rantrans, cfg.r_adam);
  AdamState kl_adam = AdamState::For(model.kl, cfg.kl_adam);

  auto& report = model.report;
  report.loss_curve.reserve(cfg.iterations);
  Matrix zb(b, 1);
  Matrix d_zhat(b, 1);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    try {
      const Matrix noise = GaussianColumn(b, rng);
      const auto idx = SampleWithoutReplacement(n, b, rng);
      const Matrix ub = SelectRows(us, idx);
      for (std::size_t i = 0; i < b; ++i) zb(i, 0) = zs[idx[i]];
      const Matrix joint = WithLastColumn(ub, zb);

      StepCounts steps;
      // Each generator step sees fresh n_G on the same rows. Reusing one
      // noise draw for all k_r steps lets the generator collapse onto it.
      Matrix step_noise = noise;
      for (int step = 0;; ++step) {
        if (step > 0) step_noise = GaussianColumn(b, rng);
        GeneratorPass g = RunGenerator(model, ub, step_noise);
        const CriticPass pass =
            EvaluateCritic(model.kl, joint, WithLastColumn(ub, g.r.output), true);
        if (step == 0) {
          report.loss_curve.push_back(pass.loss);
          steps = FeedbackSteps(pass.loss, cfg);
          report.regression_steps.push_back(steps.k_r);
          report.critic_steps.push_back(steps.k_kl);
        }
        for (std::size_t i = 0; i < b; ++i) d_zhat(i, 0) = pass.marginal_input_grad(i, m);
        const BackwardResult br = Backward(model.r, g.r.cache, d_zhat);
        Matrix d_eps(b, 1);
        for (std::size_t i = 0; i < b; ++i) d_eps(i, 0) = br.input(i, m);
        const BackwardResult bt = Backward(model.rantrans, g.rantrans.cache, d_eps);
        AdamStep(model.r, br.params, r_adam, Direction::kDescend);
        AdamStep(model.rantrans, bt.params, rt_adam, Direction::kDescend);
        if (step + 1 >= steps.k_r) break;
      }

      const Matrix eps = Predict(model.rantrans, GaussianColumn(b, rng));
      const Matrix zhat = Predict(model.r, WithLastColumn(ub, eps));
      const Matrix generated = WithLastColumn(ub, zhat);
      for (int step = 0; step < steps.k_kl; ++step) {
        const CriticPass pass = EvaluateCritic(model.kl, joint, generated, false);
        AdamStep(model.kl, pass.params, kl_adam, Direction::kAscend);
      }
    } catch (const NumericError& e) {
      throw NumericError(std::string("AdOSE training diverged: ") + e.what(), it);
    }
  }
  report.final_divergence = TailMean(report.loss_curve, cfg.smoothing_fraction);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return model;
}

namespace {

// Generated responses (original units) for each row of the already
// standardized regressor batch.
std::vector<double> Generate(const AdoseModel& model, const Matrix& us, Rng& rng) {
  const Matrix noise = GaussianColumn(us.rows(), rng);
  const Matrix zhat =
      Predict(model.r, WithLastColumn(us, Predict(model.rantrans, noise)));
  return model.scaling.InvertZ(zhat.values());
}

Matrix RepeatRow(std::span<const double> row, std::size_t times) {
  Matrix out(times, row.size());
  for (std::size_t i = 0; i < times; ++i) std::copy(row.begin(), row.end(), out.row(i).begin());
  return out;
}

}  // namespace

std::vector<double> AdoseSample(const AdoseModel& model,
                                std::span<const double> u_row,
                                std::size_t n_draws, Rng& rng) {
  const std::size_t m = model.r.in_width() - 1;
  if (u_row.size() != m) {
    throw SpecError("AdoseSample: expected " + std::to_string(m) + " regressors");
  }
  if (n_draws == 0) return {};
  const Matrix us = model.scaling.ApplyU(RepeatRow(u_row, n_draws));
  return Generate(model, us, rng);
}

std::vector<double> AdoseSampleRows(const AdoseModel& model, const Matrix& u,
                                    Rng& rng) {
  if (u.cols() != model.r.in_width() - 1) {
    throw SpecError("AdoseSampleRows: expected " +
                    std::to_string(model.r.in_width() - 1) + " regressors");
  }
  if (u.rows() == 0) return {};
  return Generate(model, model.scaling.ApplyU(u), rng);
}

double ConditionalMean(const AdoseModel& model, std::span<const double> u_row,
                       std::size_t n_draws, Rng& rng) {
  if (n_draws == 0) throw SpecError("ConditionalMean needs n_draws >= 1");
  const auto draws = AdoseSample(model, u_row, n_draws, rng);
  double sum = 0.0;
  for (double v : draws) sum += v;
  return sum / static_cast<double>(n_draws);
}

std::vector<double> ConditionalMeans(const AdoseModel& model, const Matrix& u,
                                     std::size_t n_draws, Rng& rng) {
  std::vector<double> out(u.rows());
  for (std::size_t r = 0; r < u.rows(); ++r) {
    out[r] = ConditionalMean(model, u.row(r), n_draws, rng);
  }
  return out;
}

nlohmann::json AdoseModelToJson(const AdoseModel& model, bool include_timing) {
  return {{"kind", "adose"},
          {"regression", MlpToJson(model.r)},
          {"rantrans", MlpToJson(model.rantrans)},
          {"critic", MlpToJson(model.kl)},
          {"scaling", StandardizerToJson(model.scaling)},
          {"report", ReportToJson(model.report, include_timing)}};
}

AdoseModel AdoseModelFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("kind", "") != "adose") {
    throw DataError("not an AdOSE model document");
  }
  AdoseModel model;
  try {
    model.r = MlpFromJson(doc.at("regression"));
    model.rantrans = MlpFromJson(doc.at("rantrans"));
    model.kl = MlpFromJson(doc.at("critic"));
    model.scaling = StandardizerFromJson(doc.at("scaling"));
    model.report = ReportFromJson(doc.at("report"));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed AdOSE model: ") + e.what());
  }
  return model;
}

}  // namespace ador
