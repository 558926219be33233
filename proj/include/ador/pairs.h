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

#ifndef ADOR_PAIRS_H_
#define ADOR_PAIRS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace ador {

enum class CausalDirection { kXtoY, kYtoX };

std::string ToString(CausalDirection d);

// One cause-effect pair. x and y are the data file's two columns in file
// order; ground_truth says which one is the cause.
struct PairsRecord {
  std::string id;
  std::vector<double> x;
  std::vector<double> y;
  CausalDirection ground_truth = CausalDirection::kXtoY;
  double weight = 1.0;
};

struct SkippedPair {
  std::string id;
  std::string reason;
};

struct PairsLoadResult {
  std::vector<PairsRecord> records;  // sorted by id
  std::vector<SkippedPair> skipped;
  std::size_t files_discovered = 0;  // == records.size() + skipped.size()
};

// One metadata row: 1-based column ranges of cause and effect.
struct PairMeta {
  int id = 0;
  int cause_first = 0, cause_last = 0;
  int effect_first = 0, effect_last = 0;
  double weight = 1.0;
};

// Reads either the public collection's whitespace format
// ("0001 1 1 2 2 1.0") or CSV rows "id,cause_cols,effect_cols,weight" where
// a column set is "k" or "a-b". Throws DataError with file and line.
std::vector<PairMeta> ParsePairsMeta(const std::string& text,
                                     const std::string& source = "meta");

// Whitespace-delimited numeric table. Throws DataError with file and line.
std::vector<std::vector<double>> ParseNumericTable(const std::string& text,
                                                   const std::string& source);

// Loads every pairNNNN.txt in dir. Pairs whose cause or effect spans more
// than one column, that have no metadata row, or whose data file is malformed
// are skipped and listed.
PairsLoadResult LoadPairs(const std::filesystem::path& dir,
                          const std::filesystem::path& meta_path);

}  // namespace ador

#endif  // ADOR_PAIRS_H_
