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

#include "ador/dataset.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ador/errors.h"
#include "ador/format.h"

namespace ador {

Matrix Standardizer::ApplyU(const Matrix& u) const {
  if (u.cols() != u_mean.size()) throw SpecError("standardizer width mismatch");
  Matrix out = u;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto row = out.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      row[c] = (row[c] - u_mean[c]) / u_scale[c];
    }
  }
  return out;
}

Matrix Standardizer::InvertU(const Matrix& u) const {
  if (u.cols() != u_mean.size()) throw SpecError("standardizer width mismatch");
  Matrix out = u;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto row = out.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      row[c] = row[c] * u_scale[c] + u_mean[c];
    }
  }
  return out;
}

std::vector<double> Standardizer::ApplyZ(std::span<const double> z) const {
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = (z[i] - z_mean) / z_scale;
  return out;
}

std::vector<double> Standardizer::InvertZ(std::span<const double> z) const {
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] * z_scale + z_mean;
  return out;
}

void Dataset::Validate() const {
  if (z.empty()) throw SpecError("dataset is empty");
  if (u.rows() != z.size()) throw SpecError("regressor and response lengths differ");
  if (u.cols() == 0) throw SpecError("dataset has no regressor columns");
  if (!u.AllFinite()) throw DataError("dataset '" + name + "' has non-finite regressors");
  for (double v : z) {
    if (!std::isfinite(v)) throw DataError("dataset '" + name + "' has non-finite responses");
  }
}

Dataset MakeDataset(std::span<const double> u, std::span<const double> z,
                    std::string name) {
  Dataset d;
  d.u = Matrix::Column(u);
  d.z.assign(z.begin(), z.end());
  d.name = std::move(name);
  d.Validate();
  return d;
}

namespace {

struct Moments {
  double mean;
  double scale;
  bool degenerate;
};

template <class Get>
Moments ColumnMoments(std::size_t n, Get get) {
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += get(i);
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = get(i) - mean;
    var += d * d;
  }
  var /= static_cast<double>(n);
  const double sd = std::sqrt(var);
  // Relative test: a column whose spread is rounding noise counts as
  // constant.
  const bool degenerate = !(sd > 1e-12 * std::max(1.0, std::abs(mean)));
  return {mean, degenerate ? 1.0 : sd, degenerate};
}

}  // namespace

Standardizer FitStandardizer(const Dataset& data) {
  data.Validate();
  Standardizer s;
  const std::size_t n = data.size();
  for (std::size_t c = 0; c < data.dim(); ++c) {
    const Moments m = ColumnMoments(n, [&](std::size_t i) { return data.u(i, c); });
    s.u_mean.push_back(m.mean);
    s.u_scale.push_back(m.scale);
    s.u_degenerate.push_back(m.degenerate);
  }
  const Moments m = ColumnMoments(n, [&](std::size_t i) { return data.z[i]; });
  s.z_mean = m.mean;
  s.z_scale = m.scale;
  s.z_degenerate = m.degenerate;
  return s;
}

Dataset Standardize(const Dataset& data) {
  Standardizer s = FitStandardizer(data);
  Dataset out;
  out.u = s.ApplyU(data.u);
  out.z = s.ApplyZ(data.z);
  out.name = data.name;
  out.standardizer = std::move(s);
  return out;
}

Dataset Destandardize(const Dataset& data) {
  if (!data.standardizer) return data;
  Dataset out;
  out.u = data.standardizer->InvertU(data.u);
  out.z = data.standardizer->InvertZ(data.z);
  out.name = data.name;
  return out;
}

std::string DatasetToCsv(const Dataset& data) {
  std::string out;
  if (data.dim() == 1) {
    out = "u,z\n";
  } else {
    for (std::size_t c = 0; c < data.dim(); ++c) out += "u" + std::to_string(c) + ",";
    out += "z\n";
  }
  for (std::size_t r = 0; r < data.size(); ++r) {
    for (std::size_t c = 0; c < data.dim(); ++c) out += FormatShortest(data.u(r, c)) + ",";
    out += FormatShortest(data.z[r]) + "\n";
  }
  return out;
}

Dataset DatasetFromCsv(const std::string& text, std::string name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(cells, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      while (*end == ' ' || *end == '\t') ++end;
      if (end == cell.c_str() || *end != '\0') {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows.empty() && line_no == 1) continue;  // header
      throw DataError(name + ":" + std::to_string(line_no) + ": unparsable line");
    }
    if (row.size() < 2) {
      throw DataError(name + ":" + std::to_string(line_no) + ": need at least two columns");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DataError(name + ":" + std::to_string(line_no) + ": inconsistent column count");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError(name + ": no data rows");
  const std::size_t m = rows.front().size() - 1;
  Dataset d;
  d.u = Matrix(rows.size(), m);
  d.z.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < m; ++c) d.u(r, c) = rows[r][c];
    d.z[r] = rows[r][m];
  }
  d.name = std::move(name);
  d.Validate();
  return d;
}

nlohmann::json StandardizerToJson(const Standardizer& s) {
  return {{"u_mean", s.u_mean},       {"u_scale", s.u_scale},
          {"u_degenerate", s.u_degenerate}, {"z_mean", s.z_mean},
          {"z_scale", s.z_scale},     {"z_degenerate", s.z_degenerate}};
}

Standardizer StandardizerFromJson(const nlohmann::json& doc) {
  Standardizer s;
  try {
    s.u_mean = doc.at("u_mean").get<std::vector<double>>();
    s.u_scale = doc.at("u_scale").get<std::vector<double>>();
    s.u_degenerate = doc.at("u_degenerate").get<std::vector<bool>>();
    s.z_mean = doc.at("z_mean").get<double>();
    s.z_scale = doc.at("z_scale").get<double>();
    s.z_degenerate = doc.at("z_degenerate").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed standardizer: ") + e.what());
  }
  if (s.u_mean.size() != s.u_scale.size()) throw DataError("malformed standardizer");
  return s;
}

}  // namespace ador
