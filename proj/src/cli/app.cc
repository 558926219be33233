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


#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "ador/cli.h"
#include "ador/errors.h"
#include "cli/commands.h"
#include "cli/config.h"
#include "json.hpp"

namespace ador {
namespace {

using nlohmann::json;

// Assigns value at every pointer that names an existing key, so one flag
// can steer all trainers of a subcommand.
void SetExisting(json& c, std::initializer_list<const char*> pointers, const json& value) {
  for (const char* p : pointers) {
    const json::json_pointer ptr(p);
    if (c.contains(ptr)) c[ptr] = value;
  }
}

// Options of one subcommand together with the config edit each one makes
// when given on the command line.
class FlagSet {
 public:
  explicit FlagSet(CLI::App* app) : app_(app) {}

  template <typename T>
  void Option(const std::string& name, const std::string& help,
              std::function<void(json&, const T&)> apply) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app_->add_option(name, *value, help);
    bound_.emplace_back(opt, [value, apply](json& c) { apply(c, *value); });
  }

  void Flag(const std::string& name, const std::string& help,
            std::function<void(json&)> apply) {
    bound_.emplace_back(app_->add_flag(name, help), std::move(apply));
  }

  void Apply(json& c) const {
    for (const auto& [opt, apply] : bound_) {
      if (opt->count() > 0) apply(c);
    }
  }

 private:
  CLI::App* app_;
  std::vector<std::pair<CLI::Option*, std::function<void(json&)>>> bound_;
};

const char* Describe(const std::string& command) {
  if (command == "estimate-mi") return "Estimate mutual information with MINE (Gaussian demo or CSV)";
  if (command == "ador-fit") return "Train adversarial orthogonal regression on CSV or toy data";
  if (command == "adose-fit") return "Train the adversarial structural equation model and sample from it";
  if (command == "toy-benchmark") return "Compare AdOR, AdOSE and NN-MSE on the toy regression suite";
  if (command == "distribution-demo") return "Binned conditional of AdOSE vs the true non-additive model";
  return "Infer causal direction over a directory of cause-effect pairs";
}

void AddCommonFlags(FlagSet& f) {
  f.Option<std::uint64_t>("--seed", "64-bit run seed",
                          [](json& c, const std::uint64_t& v) { c["seed"] = v; });
  f.Option<std::string>("--out", "output directory",
                        [](json& c, const std::string& v) { c["out"] = v; });
  f.Option<std::size_t>("--iters", "training iterations of every trainer", [](json& c, const std::size_t& v) {
    SetExisting(c, {"/ador/iterations", "/adose/iterations", "/mse/iterations", "/mine/iterations"}, v);
  });
  f.Option<std::size_t>("--batch", "batch parameter of every trainer", [](json& c, const std::size_t& v) {
    SetExisting(c, {"/ador/batch_half_b", "/adose/batch_b", "/mine/batch"}, v);
    // Next to AdOR, the baseline sees the same 2b rows per step.
    SetExisting(c, {"/mse/batch"}, c.contains("ador") ? 2 * v : v);
  });
  f.Option<double>("--lr", "Adam learning rate of every trained network", [](json& c, const double& v) {
    SetExisting(c,
                {"/ador/r_adam/lr", "/ador/mi_adam/lr", "/adose/r_adam/lr", "/adose/kl_adam/lr",
                 "/mse/adam/lr", "/mine/adam/lr"},
                v);
  });
  f.Flag("--timing", "include wall-clock times in reports (breaks byte-identity)",
         [](json& c) { c["timing"] = true; });
}

void AddDataFlags(FlagSet& f) {
  f.Option<std::string>("--csv", "training data CSV (last column is the response)",
                        [](json& c, const std::string& v) { c["csv"] = v; });
  f.Option<std::string>("--model", "toy function: square, sin, exp2, sigmoid5, cube, linear[:s]",
                        [](json& c, const std::string& v) { c["model"] = v; });
  f.Option<std::string>("--noise", "toy noise law, e.g. exp:1, chisq:3, binom:20,0.3, none",
                        [](json& c, const std::string& v) { c["noise"] = v; });
  f.Option<std::size_t>("--n", "toy sample count",
                        [](json& c, const std::size_t& v) { c["n"] = v; });
}

void AddCommandFlags(const std::string& command, FlagSet& f) {
  if (command == "estimate-mi") {
    f.Option<std::string>("--demo", "gaussian, independent or identity",
                          [](json& c, const std::string& v) { c["demo"] = v; });
    f.Option<double>("--rho", "correlation of the Gaussian demo",
                     [](json& c, const double& v) { c["rho"] = v; });
    f.Option<std::size_t>("--n", "demo sample count",
                          [](json& c, const std::size_t& v) { c["n"] = v; });
    f.Option<std::string>("--csv", "CSV whose last column is y and the rest x",
                          [](json& c, const std::string& v) { c["csv"] = v; });
  } else if (command == "ador-fit") {
    AddDataFlags(f);
    f.Flag("--no-audit", "skip the residual mutual-information audit",
           [](json& c) { c["audit_enabled"] = false; });
  } else if (command == "adose-fit") {
    AddDataFlags(f);
    f.Option<std::size_t>("--draws", "conditional samples written per data row",
                          [](json& c, const std::size_t& v) { c["draws"] = v; });
    f.Option<std::size_t>("--mean-draws", "draws behind each conditional-mean prediction",
                          [](json& c, const std::size_t& v) { c["mean_draws"] = v; });
  } else if (command == "toy-benchmark") {
    f.Option<std::string>("--model", "run one toy function instead of the full table",
                          [](json& c, const std::string& v) {
                            std::string noise = "exp:1";
                            for (const json& cell : c["cells"]) {
                              if (cell["model"] == v) noise = cell["noise"];
                            }
                            c["cells"] = json::array({{{"model", v}, {"noise", noise}}});
                          });
    f.Option<std::string>("--noise", "noise law for every selected cell",
                          [](json& c, const std::string& v) {
                            for (json& cell : c["cells"]) cell["noise"] = v;
                          });
    f.Option<std::string>("--method", "run one method: ador, adose or nnmse",
                          [](json& c, const std::string& v) { c["methods"] = json::array({v}); });
    f.Option<std::size_t>("--n", "samples per toy data set",
                          [](json& c, const std::size_t& v) { c["n"] = v; });
    f.Option<std::size_t>("--mean-draws", "draws behind each AdOSE prediction",
                          [](json& c, const std::size_t& v) { c["mean_draws"] = v; });
    f.Option<std::size_t>("--workers", "worker threads",
                          [](json& c, const std::size_t& v) { c["workers"] = v; });
  } else if (command == "distribution-demo") {
    f.Option<std::size_t>("--n", "training sample count",
                          [](json& c, const std::size_t& v) { c["n"] = v; });
    f.Option<std::size_t>("--samples", "samples behind each binned conditional",
                          [](json& c, const std::size_t& v) { c["samples"] = v; });
    f.Option<std::size_t>("--u-bins", "regressor bins",
                          [](json& c, const std::size_t& v) { c["u_bins"] = v; });
    f.Option<std::size_t>("--z-bins", "response bins",
                          [](json& c, const std::size_t& v) { c["z_bins"] = v; });
  } else if (command == "cep-benchmark") {
    f.Option<std::string>("--pairs-dir", "directory of pairNNNN.txt files (default $ADOR_PAIRS_DIR)",
                          [](json& c, const std::string& v) { c["pairs_dir"] = v; });
    f.Option<std::string>("--meta", "metadata file (default <pairs-dir>/pairmeta.txt)",
                          [](json& c, const std::string& v) { c["meta"] = v; });
    f.Option<std::string>("--method", "regression method: ador or adose",
                          [](json& c, const std::string& v) { c["method"] = v; });
    f.Option<std::size_t>("--limit", "only the first N pairs",
                          [](json& c, const std::size_t& v) { c["limit"] = v; });
    f.Option<std::size_t>("--mean-draws", "draws behind each AdOSE prediction",
                          [](json& c, const std::size_t& v) { c["mean_draws"] = v; });
    f.Option<std::size_t>("--workers", "worker threads",
                          [](json& c, const std::size_t& v) { c["workers"] = v; });
    f.Option<std::string>("--aupr-convention", "confidence (|S| vs correct) or signed (S vs truth)",
                          [](json& c, const std::string& v) { c["aupr_convention"] = v; });
  }
}

json LoadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read config " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("config " + path + " is not valid JSON: " + e.what());
  }
}

void WriteSnapshot(const json& c) {
  const std::filesystem::path dir = c.at("out").get<std::string>();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  std::ofstream out(dir / "config.json", std::ios::binary | std::ios::trunc);
  out << c.dump(2) << "\n";
  if (!out) throw DataError("cannot write " + (dir / "config.json").string());
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adversarial orthogonal regression and structural equation models", "ador"};
  app.require_subcommand(1, 1);
  std::map<std::string, std::unique_ptr<FlagSet>> flags;
  std::string config_path;
  for (const std::string& name : cli::CommandNames()) {
    CLI::App* sub = app.add_subcommand(name, Describe(name));
    auto set = std::make_unique<FlagSet>(sub);
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    AddCommonFlags(*set);
    AddCommandFlags(name, *set);
    flags[name] = std::move(set);
  }

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ador: error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    json c = cli::DefaultConfig(command);
    if (!config_path.empty()) {
      cli::Overlay(c, LoadConfigFile(config_path));
      if (c.at("command") != command) {
        throw SpecError("config file is for '" + c.at("command").get<std::string>() + "'");
      }
    }
    flags.at(command)->Apply(c);
    if (c.contains("pairs_dir") && c["pairs_dir"].is_null()) {
      if (const char* env = std::getenv("ADOR_PAIRS_DIR"); env && *env) c["pairs_dir"] = env;
    }
    WriteSnapshot(c);
    cli::Execute(c, out);
    return kExitOk;
  } catch (const NumericError& e) {
    err << "ador: numeric divergence: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DataError& e) {
    err << "ador: data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "ador: data error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "ador: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "ador: error: bad configuration value: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ador
