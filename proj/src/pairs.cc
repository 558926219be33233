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

#include "ador/pairs.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "ador/errors.h"

namespace ador {

std::string ToString(CausalDirection d) {
  return d == CausalDirection::kXtoY ? "x->y" : "y->x";
}

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool ParseInt(const std::string& s, int& out) {
  const std::string t = Trim(s);
  if (t.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoi(t, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == t.size();
}

bool ParseRange(const std::string& s, int& first, int& last) {
  const std::string t = Trim(s);
  const auto dash = t.find_first_of("-:", 1);
  if (dash == std::string::npos) {
    if (!ParseInt(t, first)) return false;
    last = first;
    return true;
  }
  return ParseInt(t.substr(0, dash), first) && ParseInt(t.substr(dash + 1), last);
}

}  // namespace

std::vector<PairMeta> ParsePairsMeta(const std::string& text,
                                     const std::string& source) {
  std::vector<PairMeta> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw DataError(source + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    PairMeta m;
    if (t.find(',') != std::string::npos) {
      std::vector<std::string> cells;
      std::istringstream cs(t);
      std::string cell;
      while (std::getline(cs, cell, ',')) cells.push_back(cell);
      if (cells.size() < 3) fail("expected id,cause_cols,effect_cols[,weight]");
      if (!ParseInt(cells[0], m.id)) {
        if (out.empty() && line_no == 1) continue;  // header
        fail("bad pair id '" + cells[0] + "'");
      }
      if (!ParseRange(cells[1], m.cause_first, m.cause_last)) fail("bad cause columns");
      if (!ParseRange(cells[2], m.effect_first, m.effect_last)) fail("bad effect columns");
      if (cells.size() > 3 && !Trim(cells[3]).empty()) {
        try {
          m.weight = std::stod(Trim(cells[3]));
        } catch (const std::exception&) {
          fail("bad weight");
        }
      }
    } else {
      std::istringstream ws(t);
      if (!(ws >> m.id >> m.cause_first >> m.cause_last >> m.effect_first >>
            m.effect_last)) {
        fail("expected 'id cause_first cause_last effect_first effect_last weight'");
      }
      if (!(ws >> m.weight)) m.weight = 1.0;
    }
    if (m.cause_first < 1 || m.cause_last < m.cause_first || m.effect_first < 1 ||
        m.effect_last < m.effect_first) {
      fail("invalid column range");
    }
    if (!std::isfinite(m.weight) || m.weight < 0) fail("invalid weight");
    out.push_back(m);
  }
  return out;
}

std::vector<std::vector<double>> ParseNumericTable(const std::string& text,
                                                   const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<double> row;
    const char* p = line.c_str();
    while (true) {
      while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
      if (*p == '\0') break;
      char* end = nullptr;
      const double v = std::strtod(p, &end);
      if (end == p || !std::isfinite(v)) {
        throw DataError(source + ":" + std::to_string(line_no) +
                        ": unparsable numeric field");
      }
      row.push_back(v);
      p = end;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": inconsistent column count");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PairsLoadResult LoadPairs(const std::filesystem::path& dir,
                          const std::filesystem::path& meta_path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir.string());
  const auto metas = ParsePairsMeta(ReadFile(meta_path), meta_path.string());
  std::map<int, PairMeta> by_id;
  for (const auto& m : metas) by_id[m.id] = m;

  static const std::regex kPairFile(R"(pair(\d{4})\.txt)");
  std::vector<std::pair<int, fs::path>> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::smatch match;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, match, kPairFile)) {
      files.emplace_back(std::stoi(match[1].str()), entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  PairsLoadResult result;
  result.files_discovered = files.size();
  for (const auto& [num, path] : files) {
    char id_buf[16];
    std::snprintf(id_buf, sizeof(id_buf), "pair%04d", num);
    const std::string id = id_buf;
    const auto it = by_id.find(num);
    if (it == by_id.end()) {
      result.skipped.push_back({id, "no metadata row"});
      continue;
    }
    const PairMeta& m = it->second;
    if (m.cause_first != m.cause_last || m.effect_first != m.effect_last) {
      result.skipped.push_back({id, "multivariate cause or effect"});
      continue;
    }
    std::vector<std::vector<double>> table;
    try {
      table = ParseNumericTable(ReadFile(path), path.string());
    } catch (const DataError& e) {
      result.skipped.push_back({id, e.what()});
      continue;
    }
    const int need = std::max(m.cause_first, m.effect_first);
    if (table.empty() || static_cast<int>(table.front().size()) < need) {
      result.skipped.push_back({id, "data file has too few columns"});
      continue;
    }
    const int col_x = std::min(m.cause_first, m.effect_first) - 1;
    const int col_y = std::max(m.cause_first, m.effect_first) - 1;
    if (col_x == col_y) {
      result.skipped.push_back({id, "cause and effect share a column"});
      continue;
    }
    PairsRecord rec;
    rec.id = id;
    rec.weight = m.weight;
    rec.ground_truth = m.cause_first - 1 == col_x ? CausalDirection::kXtoY
                                                  : CausalDirection::kYtoX;
    for (const auto& row : table) {
      rec.x.push_back(row[col_x]);
      rec.y.push_back(row[col_y]);
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace ador
