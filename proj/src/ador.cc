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

#include "ador/ador.h"

#include <chrono>
#include <string>

#include "ador/dv.h"
#include "ador/errors.h"
#include "ador/mlp_json.h"

namespace ador {

void AdorConfig::Validate() const {
  if (batch_half_b < 2) throw ParameterError("AdOR: batch_half_b must be >= 2");
  if (k_r < 1 || k_mi < 1) throw ParameterError("AdOR: k_r and k_mi must be >= 1");
  if (iterations < 1) throw ParameterError("AdOR: iterations must be >= 1");
  if (!(smoothing_fraction > 0 && smoothing_fraction <= 1)) {
    throw ParameterError("AdOR: smoothing_fraction must lie in (0, 1]");
  }
  if (!(r_ema_decay >= 0 && r_ema_decay < 1)) {
    throw ParameterError("AdOR: r_ema_decay must lie in [0, 1)");
  }
}

std::vector<LayerSpec> RegressionSpecs(std::size_t in_width,
                                       const std::vector<std::size_t>& hidden,
                                       double leaky_slope, bool output_bias) {
  static const Activation::Kind kCycle[] = {Activation::Kind::kTanh,
                                            Activation::Kind::kSigmoid,
                                            Activation::Kind::kLeakyRelu};
  std::vector<Activation> acts;
  for (std::size_t k = 0; k < hidden.size(); ++k) {
    acts.push_back({kCycle[k % 3], leaky_slope});
  }
  return BuildSpecs(in_width, hidden, acts, 1, Activation::Identity(), output_bias);
}

namespace {

Standardizer IdentityScaling(std::size_t m) {
  Standardizer s;
  s.u_mean.assign(m, 0.0);
  s.u_scale.assign(m, 1.0);
  s.u_degenerate.assign(m, false);
  return s;
}

// Residuals z - R(u) of a minibatch as a column, centred on their batch
// mean. MI is unchanged by a constant shift of the residual; centring keeps
// the critic's input stationary while R's unidentified offset wanders.
Matrix BatchResiduals(const Matrix& prediction, std::span<const double> z) {
  Matrix eps(z.size(), 1);
  double mean = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    eps(i, 0) = z[i] - prediction(i, 0);
    mean += eps(i, 0);
  }
  mean /= static_cast<double>(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) eps(i, 0) -= mean;
  return eps;
}

}  // namespace

RegressionPass AdorRegressionPass(const MlpParams& r, const MlpParams& mi,
                                  const Matrix& u, std::span<const double> z) {
  if (u.rows() != z.size() || u.rows() % 2 != 0) {
    throw SpecError("AdOR pass: need an even number of rows matching z");
  }
  const std::size_t b = u.rows() / 2;
  ForwardResult fr = Forward(r, u);
  const PairedBatch pb = MarginalPairing(u, BatchResiduals(fr.output, z));
  const CriticPass pass = EvaluateCritic(mi, pb.joint, pb.marginal, true);
  // eps_i enters the joint half as row i and the marginal half as row
  // i - b; d eps / d prediction = -1. Centring projects the gradient onto
  // zero-sum vectors.
  Matrix d_pred(2 * b, 1);
  double mean_grad = 0.0;
  for (std::size_t i = 0; i < b; ++i) {
    d_pred(i, 0) = -pass.joint_input_grad(i, 0);
    d_pred(i + b, 0) = -pass.marginal_input_grad(i, 0);
    mean_grad += d_pred(i, 0) + d_pred(i + b, 0);
  }
  mean_grad /= static_cast<double>(2 * b);
  for (std::size_t i = 0; i < 2 * b; ++i) d_pred(i, 0) -= mean_grad;
  return {pass.loss, Backward(r, fr.cache, d_pred).params};
}

AdorModel AdorTrain(const Dataset& data, const AdorConfig& cfg, Rng& rng) {
  cfg.Validate();
  data.Validate();
  const std::size_t n = data.size();
  const std::size_t b = cfg.batch_half_b;
  if (n < 2 * b) {
    throw SpecError("AdOR: dataset has " + std::to_string(n) + " rows, needs >= " +
                    std::to_string(2 * b));
  }
  const auto start = std::chrono::steady_clock::now();

  AdorModel model;
  model.scaling = cfg.standardize ? FitStandardizer(data) : IdentityScaling(data.dim());
  const Matrix us = model.scaling.ApplyU(data.u);
  const std::vector<double> zs = model.scaling.ApplyZ(data.z);

  model.report.seed = rng.seed();
  model.r = XavierInit(RegressionSpecs(data.dim(), cfg.r_hidden, cfg.leaky_slope, false), rng);
  model.mi = XavierInit(CriticSpecs(data.dim() + 1, cfg.mi_hidden, cfg.leaky_slope), rng);
  AdamState r_adam = AdamState::For(model.r, cfg.r_adam);
  AdamState mi_adam = AdamState::For(model.mi, cfg.mi_adam);

  const bool averaging = cfg.r_ema_decay > 0;
  MlpParams r_avg = averaging ? model.r : MlpParams{};

  auto& curve = model.report.loss_curve;
  curve.reserve(cfg.iterations);
  std::vector<double> zb(2 * b);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    try {
      const auto idx = SampleWithoutReplacement(n, 2 * b, rng);
      const Matrix ub = SelectRows(us, idx);
      for (std::size_t i = 0; i < idx.size(); ++i) zb[i] = zs[idx[i]];

      for (std::size_t step = 0; step < cfg.k_r; ++step) {
        const RegressionPass pass = AdorRegressionPass(model.r, model.mi, ub, zb);
        if (step == 0) curve.push_back(pass.loss);
        AdamStep(model.r, pass.grads, r_adam, Direction::kDescend);
      }
      if (averaging) BlendInto(r_avg, model.r, cfg.r_ema_decay);
      const Matrix residual = BatchResiduals(Predict(model.r, ub), zb);
      const PairedBatch pb = MarginalPairing(ub, residual);
      for (std::size_t step = 0; step < cfg.k_mi; ++step) {
        const CriticPass pass = EvaluateCritic(model.mi, pb.joint, pb.marginal, false);
        AdamStep(model.mi, pass.params, mi_adam, Direction::kAscend);
      }
    } catch (const NumericError& e) {
      throw NumericError(std::string("AdOR training diverged: ") + e.what(), it);
    }
  }
  model.report.final_divergence = TailMean(curve, cfg.smoothing_fraction);
  if (averaging) model.r = std::move(r_avg);
  {
    const Matrix fitted = Predict(model.r, us);
    double offset = 0.0;
    for (std::size_t i = 0; i < n; ++i) offset += zs[i] - fitted(i, 0);
    model.intercept = offset / static_cast<double>(n);
  }
  model.report.wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return model;
}

std::vector<double> AdorPredict(const AdorModel& model, const Matrix& u) {
  if (u.cols() != model.r.in_width()) {
    throw SpecError("AdorPredict: expected " + std::to_string(model.r.in_width()) +
                    " regressor columns, got " + std::to_string(u.cols()));
  }
  if (u.rows() == 0) return {};
  Matrix out = Predict(model.r, model.scaling.ApplyU(u));
  for (double& v : out.values()) v += model.intercept;
  return model.scaling.InvertZ(out.values());
}

std::vector<double> AdorResiduals(const AdorModel& model, const Dataset& data) {
  const auto pred = AdorPredict(model, data.u);
  std::vector<double> eps(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) eps[i] = data.z[i] - pred[i];
  return eps;
}

MineConfig ResidualAuditDefaults() {
  MineConfig cfg;
  cfg.batch = 64;
  cfg.iterations = 2000;
  cfg.adam.lr = 1e-4;
  return cfg;
}

MineEstimate ResidualMiAudit(const AdorModel& model, const Dataset& data,
                             const MineConfig& cfg, Rng& rng) {
  data.Validate();
  MineConfig audit = cfg;
  audit.batch = std::min(cfg.batch, data.size() / 4);
  const auto eps = AdorResiduals(model, data);
  return EstimateMi(data.u, Matrix::Column(eps), audit, rng);
}

nlohmann::json AdorModelToJson(const AdorModel& model, bool include_timing) {
  return {{"kind", "ador"},
          {"regression", MlpToJson(model.r)},
          {"critic", MlpToJson(model.mi)},
          {"intercept", model.intercept},
          {"scaling", StandardizerToJson(model.scaling)},
          {"report", ReportToJson(model.report, include_timing)}};
}

AdorModel AdorModelFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("kind", "") != "ador") {
    throw DataError("not an AdOR model document");
  }
  AdorModel model;
  try {
    model.r = MlpFromJson(doc.at("regression"));
    model.mi = MlpFromJson(doc.at("critic"));
    model.scaling = StandardizerFromJson(doc.at("scaling"));
    model.intercept = doc.at("intercept").get<double>();
    model.report = ReportFromJson(doc.at("report"));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed AdOR model: ") + e.what());
  }
  return model;
}

}  // namespace ador
