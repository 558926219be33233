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

#ifndef ADOR_DV_H_
#define ADOR_DV_H_

#include <span>
#include <vector>

#include "ador/matrix.h"

namespace ador {

// Critic outputs on one minibatch: t_joint on samples of the joint law,
// t_marginal on samples of the reference law. Both hold b >= 2 values.
struct DvBatch {
  std::vector<double> t_joint;
  std::vector<double> t_marginal;
};

struct DvLossGrad {
  double loss = 0.0;
  std::vector<double> d_joint;     // 1 / b each
  std::vector<double> d_marginal;  // -softmax(t_marginal)
};

// Donsker-Varadhan objective mean(t_joint) - log(mean(exp(t_marginal))).
// The maximum over both vectors is subtracted from every entry first; the
// shift cancels between the two terms, so the value is unchanged and exp()
// never overflows. Throws SpecError if b < 2 or the lengths differ, and
// NumericError for non-finite entries.
double DvLoss(std::span<const double> t_joint, std::span<const double> t_marginal);
inline double DvLoss(const DvBatch& batch) {
  return DvLoss(batch.t_joint, batch.t_marginal);
}

// Loss together with its gradient with respect to both vectors.
DvLossGrad DvLossWithGrad(std::span<const double> t_joint,
                          std::span<const double> t_marginal);

struct PairedBatch {
  Matrix joint;     // b x (q + m), rows [residual_i | regressor_i]
  Matrix marginal;  // b x (q + m), rows [residual_{i+b} | regressor_i]
};

// Splits 2b rows into b joint pairs and b marginal pairs: the second half's
// residuals are recombined with the first half's regressors. No shuffling.
// Throws SpecError for an odd row count, fewer than 4 rows, or mismatched
// row counts.
PairedBatch MarginalPairing(const Matrix& regressors, const Matrix& residuals);

}  // namespace ador

#endif  // ADOR_DV_H_
