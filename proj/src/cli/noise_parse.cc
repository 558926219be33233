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


#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "ador/cli.h"
#include "ador/errors.h"

namespace ador {
namespace {

double ParseNumber(const std::string& text, const std::string& whole) {
  if (text.empty()) throw ParameterError("missing number in noise '" + whole + "'");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (errno != 0 || end != text.c_str() + text.size()) {
    throw ParameterError("bad number '" + text + "' in noise '" + whole + "'");
  }
  return v;
}

int ParseInt(const std::string& text, const std::string& whole) {
  const double v = ParseNumber(text, whole);
  if (v != static_cast<double>(static_cast<int>(v))) {
    throw ParameterError("expected an integer, got '" + text + "' in noise '" +
                         whole + "'");
  }
  return static_cast<int>(v);
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

// Position of a trailing "+offset" or "-offset", skipping exponent signs
// and the sign of a leading parameter.
std::size_t OffsetPosition(const std::string& params) {
  for (std::size_t i = params.size(); i-- > 1;) {
    const char c = params[i];
    if (c != '+' && c != '-') continue;
    const char prev = params[i - 1];
    if (prev == 'e' || prev == 'E' || prev == ',') continue;
    if (std::isdigit(static_cast<unsigned char>(prev)) || prev == '.') return i;
  }
  return std::string::npos;
}

}  // namespace

DistSpec ParseDistSpec(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParameterError("noise '" + text + "' must look like name:params");
  }
  const std::string name = text.substr(0, colon);
  std::string params = text.substr(colon + 1);
  std::optional<double> offset;
  if (const std::size_t pos = OffsetPosition(params); pos != std::string::npos) {
    offset = ParseNumber(params.substr(pos), text);
    params.resize(pos);
  }
  const std::vector<std::string> p = SplitCommas(params);
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      throw ParameterError("noise '" + name + "' takes " +
                           std::to_string(count) + " parameter(s)");
    }
  };
  std::optional<DistSpec> spec;
  if (name == "exp") {
    want(1);
    spec = DistSpec::MakeExponential(ParseNumber(p[0], text));
  } else if (name == "chisq") {
    want(1);
    spec = DistSpec::MakeChiSquare(ParseInt(p[0], text));
  } else if (name == "rayleigh") {
    want(1);
    spec = DistSpec::MakeRayleigh(ParseNumber(p[0], text));
  } else if (name == "binom") {
    want(2);
    spec = DistSpec::MakeBinomial(ParseInt(p[0], text), ParseNumber(p[1], text));
  } else if (name == "uniform") {
    want(2);
    spec = DistSpec::MakeUniform(ParseNumber(p[0], text), ParseNumber(p[1], text));
  } else if (name == "normal") {
    want(2);
    spec = DistSpec::MakeNormal(ParseNumber(p[0], text), ParseNumber(p[1], text));
  } else if (name == "lognormal") {
    want(2);
    spec = DistSpec::MakeLogNormal(ParseNumber(p[0], text), ParseNumber(p[1], text));
  } else {
    throw ParameterError("unknown noise law '" + name + "'");
  }
  if (offset) spec = DistSpec::MakeShifted(*spec, *offset);
  spec->Validate();
  return *spec;
}

std::optional<DistSpec> ParseNoise(const std::string& text) {
  if (text == "none") return std::nullopt;
  return ParseDistSpec(text);
}

}  // namespace ador
