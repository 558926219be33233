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

#include "ador/mine.h"

#include <cmath>
#include <string>

#include "ador/dv.h"
#include "ador/errors.h"
#include "ador/train_report.h"

namespace ador {

std::vector<LayerSpec> CriticSpecs(std::size_t in_width,
                                   const std::vector<std::size_t>& hidden,
                                   double leaky_slope) {
  const std::vector<Activation> acts(hidden.size(), Activation::LeakyRelu(leaky_slope));
  return BuildSpecs(in_width, hidden, acts, 1, Activation::Identity(), false);
}

CriticPass EvaluateCritic(const MlpParams& critic, const Matrix& joint,
                          const Matrix& marginal, bool want_input_grads) {
  ForwardResult fj = Forward(critic, joint);
  ForwardResult fm = Forward(critic, marginal);
  const DvLossGrad dv = DvLossWithGrad(fj.output.values(), fm.output.values());
  BackwardResult bj = Backward(critic, fj.cache, Matrix::Column(dv.d_joint));
  BackwardResult bm = Backward(critic, fm.cache, Matrix::Column(dv.d_marginal));
  CriticPass pass;
  pass.loss = dv.loss;
  pass.params = std::move(bj.params);
  AddInPlace(pass.params, bm.params);
  if (want_input_grads) {
    pass.joint_input_grad = std::move(bj.input);
    pass.marginal_input_grad = std::move(bm.input);
  }
  return pass;
}

Matrix StandardizeColumns(const Matrix& m) {
  Matrix out = m;
  const auto n = static_cast<double>(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) mean += m(r, c);
    mean /= n;
    double var = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) var += (m(r, c) - mean) * (m(r, c) - mean);
    const double sd = std::sqrt(var / n);
    const double scale = sd > 1e-12 * std::max(1.0, std::abs(mean)) ? sd : 1.0;
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = (m(r, c) - mean) / scale;
  }
  return out;
}

MineEstimate EstimateMi(const Matrix& x, const Matrix& y, const MineConfig& cfg,
                        Rng& rng) {
  const std::size_t n = x.rows();
  if (y.rows() != n) throw SpecError("EstimateMi: x and y row counts differ");
  if (x.cols() == 0 || y.cols() == 0) throw SpecError("EstimateMi: empty variable");
  if (cfg.batch < 2) throw SpecError("EstimateMi: batch must be >= 2");
  if (n < 4 * cfg.batch) {
    throw SpecError("EstimateMi: need n >= 4 * batch (n=" + std::to_string(n) +
                    ", batch=" + std::to_string(cfg.batch) + ")");
  }
  if (cfg.iterations == 0) throw SpecError("EstimateMi: iterations must be >= 1");

  const Matrix xs = StandardizeColumns(x);
  const Matrix ys = StandardizeColumns(y);

  MineEstimate est;
  est.seed = rng.seed();
  est.iterations = cfg.iterations;
  est.loss_curve.reserve(cfg.iterations);

  MlpParams critic = XavierInit(CriticSpecs(x.cols() + y.cols(), cfg.hidden,
                                            cfg.leaky_slope),
                                rng);
  AdamState adam = AdamState::For(critic, cfg.adam);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    const auto idx = SampleWithoutReplacement(n, 2 * cfg.batch, rng);
    const PairedBatch pb = MarginalPairing(SelectRows(xs, idx), SelectRows(ys, idx));
    CriticPass pass;
    try {
      pass = EvaluateCritic(critic, pb.joint, pb.marginal, false);
    } catch (const NumericError& e) {
      throw NumericError(std::string("MINE diverged: ") + e.what(), it);
    }
    est.loss_curve.push_back(pass.loss);
    AdamStep(critic, pass.params, adam, Direction::kAscend);
  }
  est.mi_nats = TailMean(est.loss_curve, cfg.smoothing_fraction);
  return est;
}

}  // namespace ador
