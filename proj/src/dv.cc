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

#include "ador/dv.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ador/errors.h"

namespace ador {
namespace {

void CheckBatch(std::span<const double> t_joint, std::span<const double> t_marginal) {
  if (t_joint.size() != t_marginal.size()) {
    throw SpecError("DV batch halves differ in length");
  }
  if (t_joint.size() < 2) throw SpecError("DV batch needs b >= 2");
}

double BatchMax(std::span<const double> a, std::span<const double> b) {
  double m = -INFINITY;
  for (double v : a) {
    if (!std::isfinite(v)) throw NumericError("non-finite critic output");
    m = std::max(m, v);
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw NumericError("non-finite critic output");
    m = std::max(m, v);
  }
  return m;
}

}  // namespace

double DvLoss(std::span<const double> t_joint, std::span<const double> t_marginal) {
  return DvLossWithGrad(t_joint, t_marginal).loss;
}

DvLossGrad DvLossWithGrad(std::span<const double> t_joint,
                          std::span<const double> t_marginal) {
  CheckBatch(t_joint, t_marginal);
  const double shift = BatchMax(t_joint, t_marginal);
  const std::size_t b = t_joint.size();
  const double inv_b = 1.0 / static_cast<double>(b);

  double joint_mean = 0.0;
  for (double v : t_joint) joint_mean += v - shift;
  joint_mean *= inv_b;

  // The log-mean-exp term is evaluated around the marginal half's own
  // maximum, which differs from the common shift only when the joint half
  // dominates; then exp(t - shift) could underflow for every marginal entry.
  double marginal_max = -INFINITY;
  for (double v : t_marginal) marginal_max = std::max(marginal_max, v);
  DvLossGrad out;
  out.d_marginal.resize(b);
  double exp_sum = 0.0;  // >= 1: the maximal entry contributes exp(0)
  for (std::size_t i = 0; i < b; ++i) {
    out.d_marginal[i] = std::exp(t_marginal[i] - marginal_max);
    exp_sum += out.d_marginal[i];
  }
  out.loss = joint_mean - ((marginal_max - shift) + std::log(exp_sum * inv_b));
  for (double& d : out.d_marginal) d = -d / exp_sum;
  out.d_joint.assign(b, inv_b);
  return out;
}

PairedBatch MarginalPairing(const Matrix& regressors, const Matrix& residuals) {
  const std::size_t rows = regressors.rows();
  if (residuals.rows() != rows) throw SpecError("pairing: row counts differ");
  if (rows % 2 != 0) throw SpecError("pairing needs an even row count, got " +
                                     std::to_string(rows));
  if (rows < 4) throw SpecError("pairing needs at least 4 rows");
  const std::size_t b = rows / 2;
  const std::size_t q = residuals.cols();
  const std::size_t m = regressors.cols();
  PairedBatch out{Matrix(b, q + m), Matrix(b, q + m)};
  for (std::size_t i = 0; i < b; ++i) {
    auto joint = out.joint.row(i);
    auto marginal = out.marginal.row(i);
    auto res_joint = residuals.row(i);
    auto res_other = residuals.row(i + b);
    auto reg = regressors.row(i);
    std::copy(res_joint.begin(), res_joint.end(), joint.begin());
    std::copy(res_other.begin(), res_other.end(), marginal.begin());
    std::copy(reg.begin(), reg.end(), joint.begin() + q);
    std::copy(reg.begin(), reg.end(), marginal.begin() + q);
  }
  return out;
}

}  // namespace ador
