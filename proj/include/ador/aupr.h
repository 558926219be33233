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

#ifndef ADOR_AUPR_H_
#define ADOR_AUPR_H_

#include <span>
#include <vector>

namespace ador {

// Area under the precision-recall curve. Instances are ranked by score,
// descending; each distinct score is one threshold (tied instances enter
// together), and the area is the step sum of precision times the recall
// gained at each threshold (average precision, no interpolation).
// Throws SpecError on length mismatch or when no label is positive.
double Aupr(std::span<const double> scores, const std::vector<bool>& labels);

}  // namespace ador

#endif  // ADOR_AUPR_H_
