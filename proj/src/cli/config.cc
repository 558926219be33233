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


#include "cli/config.h"

#include <string>

#include "ador/errors.h"

namespace ador::cli {
namespace {

using nlohmann::json;

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SpecError(std::string("config key '") + key + "': " + e.what());
  }
}

const char* KindName(const json& j) {
  if (j.is_number_unsigned()) return "non-negative integer";
  if (j.is_number()) return "number";
  return j.type_name();
}

bool Compatible(const json& base, const json& patch) {
  if (base.is_null()) return true;
  if (base.is_number_unsigned()) return patch.is_number_unsigned();
  if (base.is_number()) return patch.is_number();
  if (base.is_array()) {
    if (!patch.is_array()) return false;
    if (base.empty()) return true;
    for (const json& v : patch) {
      if (!Compatible(base.front(), v)) return false;
    }
    return true;
  }
  return base.type() == patch.type();
}

}  // namespace

json ToJson(const AdamConfig& c) {
  return {{"lr", c.lr}, {"beta1", c.beta1}, {"beta2", c.beta2}, {"eps", c.eps_hat}};
}

json ToJson(const AdorConfig& c) {
  return {{"batch_half_b", c.batch_half_b},
          {"iterations", c.iterations},
          {"k_r", c.k_r},
          {"k_mi", c.k_mi},
          {"r_hidden", c.r_hidden},
          {"mi_hidden", c.mi_hidden},
          {"leaky_slope", c.leaky_slope},
          {"r_adam", ToJson(c.r_adam)},
          {"mi_adam", ToJson(c.mi_adam)},
          {"smoothing_fraction", c.smoothing_fraction},
          {"r_ema_decay", c.r_ema_decay},
          {"standardize", c.standardize}};
}

json ToJson(const AdoseConfig& c) {
  return {{"batch_b", c.batch_b},
          {"iterations", c.iterations},
          {"feedback_a", c.feedback_a},
          {"feedback_b", c.feedback_b},
          {"step_min", c.step_min},
          {"step_max", c.step_max},
          {"r_hidden", c.r_hidden},
          {"kl_hidden", c.kl_hidden},
          {"rantrans_hidden", c.rantrans_hidden},
          {"leaky_slope", c.leaky_slope},
          {"r_adam", ToJson(c.r_adam)},
          {"kl_adam", ToJson(c.kl_adam)},
          {"smoothing_fraction", c.smoothing_fraction},
          {"standardize", c.standardize}};
}

json ToJson(const MineConfig& c) {
  return {{"batch", c.batch},
          {"iterations", c.iterations},
          {"hidden", c.hidden},
          {"leaky_slope", c.leaky_slope},
          {"adam", ToJson(c.adam)},
          {"smoothing_fraction", c.smoothing_fraction}};
}

json ToJson(const MseConfig& c) {
  return {{"batch", c.batch},
          {"iterations", c.iterations},
          {"hidden", c.hidden},
          {"leaky_slope", c.leaky_slope},
          {"adam", ToJson(c.adam)},
          {"smoothing_fraction", c.smoothing_fraction},
          {"standardize", c.standardize}};
}

AdamConfig AdamConfigFromJson(const json& j) {
  AdamConfig c;
  c.lr = Get<double>(j, "lr");
  c.beta1 = Get<double>(j, "beta1");
  c.beta2 = Get<double>(j, "beta2");
  c.eps_hat = Get<double>(j, "eps");
  return c;
}

AdorConfig AdorConfigFromJson(const json& j) {
  AdorConfig c;
  c.batch_half_b = Get<std::size_t>(j, "batch_half_b");
  c.iterations = Get<std::size_t>(j, "iterations");
  c.k_r = Get<std::size_t>(j, "k_r");
  c.k_mi = Get<std::size_t>(j, "k_mi");
  c.r_hidden = Get<std::vector<std::size_t>>(j, "r_hidden");
  c.mi_hidden = Get<std::vector<std::size_t>>(j, "mi_hidden");
  c.leaky_slope = Get<double>(j, "leaky_slope");
  c.r_adam = AdamConfigFromJson(j.at("r_adam"));
  c.mi_adam = AdamConfigFromJson(j.at("mi_adam"));
  c.smoothing_fraction = Get<double>(j, "smoothing_fraction");
  c.r_ema_decay = Get<double>(j, "r_ema_decay");
  c.standardize = Get<bool>(j, "standardize");
  return c;
}

AdoseConfig AdoseConfigFromJson(const json& j) {
  AdoseConfig c;
  c.batch_b = Get<std::size_t>(j, "batch_b");
  c.iterations = Get<std::size_t>(j, "iterations");
  c.feedback_a = Get<double>(j, "feedback_a");
  c.feedback_b = Get<double>(j, "feedback_b");
  c.step_min = Get<int>(j, "step_min");
  c.step_max = Get<int>(j, "step_max");
  c.r_hidden = Get<std::vector<std::size_t>>(j, "r_hidden");
  c.kl_hidden = Get<std::vector<std::size_t>>(j, "kl_hidden");
  c.rantrans_hidden = Get<std::size_t>(j, "rantrans_hidden");
  c.leaky_slope = Get<double>(j, "leaky_slope");
  c.r_adam = AdamConfigFromJson(j.at("r_adam"));
  c.kl_adam = AdamConfigFromJson(j.at("kl_adam"));
  c.smoothing_fraction = Get<double>(j, "smoothing_fraction");
  c.standardize = Get<bool>(j, "standardize");
  return c;
}

MineConfig MineConfigFromJson(const json& j) {
  MineConfig c;
  c.batch = Get<std::size_t>(j, "batch");
  c.iterations = Get<std::size_t>(j, "iterations");
  c.hidden = Get<std::vector<std::size_t>>(j, "hidden");
  c.leaky_slope = Get<double>(j, "leaky_slope");
  c.adam = AdamConfigFromJson(j.at("adam"));
  c.smoothing_fraction = Get<double>(j, "smoothing_fraction");
  return c;
}

MseConfig MseConfigFromJson(const json& j) {
  MseConfig c;
  c.batch = Get<std::size_t>(j, "batch");
  c.iterations = Get<std::size_t>(j, "iterations");
  c.hidden = Get<std::vector<std::size_t>>(j, "hidden");
  c.leaky_slope = Get<double>(j, "leaky_slope");
  c.adam = AdamConfigFromJson(j.at("adam"));
  c.smoothing_fraction = Get<double>(j, "smoothing_fraction");
  c.standardize = Get<bool>(j, "standardize");
  return c;
}

void Overlay(json& base, const json& patch, const std::string& path) {
  if (!patch.is_object()) {
    throw SpecError("config " + (path.empty() ? std::string("root") : path) +
                    " must be a JSON object");
  }
  for (const auto& [key, value] : patch.items()) {
    const std::string where = path.empty() ? key : path + "." + key;
    if (!base.contains(key)) throw SpecError("unknown config key '" + where + "'");
    json& slot = base[key];
    if (slot.is_object()) {
      Overlay(slot, value, where);
    } else if (Compatible(slot, value)) {
      slot = value;
    } else {
      throw SpecError("config key '" + where + "' expects a " + KindName(slot) +
                      ", got " + KindName(value));
    }
  }
}

}  // namespace ador::cli
