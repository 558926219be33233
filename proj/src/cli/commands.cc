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


#include "cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ador/ador.h"
#include "ador/adose.h"
#include "ador/aupr.h"
#include "ador/baseline.h"
#include "ador/binning.h"
#include "ador/cli.h"
#include "ador/dataset.h"
#include "ador/direction.h"
#include "ador/errors.h"
#include "ador/format.h"
#include "ador/metrics.h"
#include "ador/mine.h"
#include "ador/pairs.h"
#include "ador/toy.h"
#include "ador/train_report.h"
#include "cli/config.h"

namespace ador::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::size_t kCurvePoints = 201;

struct TableCell {
  const char* model;
  const char* noise;
};

// The four function/noise pairings of the toy benchmark, in column order.
constexpr TableCell kToyTable[] = {
    {"square", "exp:1"},
    {"sin", "chisq:3"},
    {"exp2", "rayleigh:4"},
    {"sigmoid5", "binom:20,0.3"},
};

// Row order of the wide toy table.
const std::vector<std::string> kMethods = {"nnmse", "adose", "ador"};

std::string Num(double v) { return FormatShortest(v); }

std::string Sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::uint64_t Fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed for " + path.string());
}

void WriteJson(const fs::path& path, const json& doc) {
  WriteFile(path, doc.dump(2) + "\n");
}

fs::path OutDir(const json& c) {
  fs::path dir = c.at("out").get<std::string>();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

std::uint64_t Seed(const json& c) { return c.at("seed").get<std::uint64_t>(); }
bool Timing(const json& c) { return c.at("timing").get<bool>(); }

// Runs fn(0..count-1) on up to `workers` threads. Every task runs; the
// failure with the lowest index is rethrown so errors are reproducible.
template <typename Fn>
void ParallelFor(std::size_t count, std::size_t workers, Fn fn) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto loop = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    loop();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Header "u,..." columns matching DatasetToCsv.
std::string UHeader(std::size_t m) {
  if (m == 1) return "u";
  std::string h;
  for (std::size_t k = 0; k < m; ++k) h += (k ? ",u" : "u") + std::to_string(k);
  return h;
}

std::string URow(const Matrix& u, std::size_t r) {
  std::string s;
  for (std::size_t k = 0; k < u.cols(); ++k) s += (k ? "," : "") + Num(u(r, k));
  return s;
}

std::string PredictionsCsv(const Dataset& data, const std::vector<double>& pred) {
  std::string s = UHeader(data.dim()) + ",z,prediction,residual\n";
  for (std::size_t r = 0; r < data.size(); ++r) {
    s += URow(data.u, r) + "," + Num(data.z[r]) + "," + Num(pred[r]) + "," +
         Num(data.z[r] - pred[r]) + "\n";
  }
  return s;
}

std::string StepsCsv(const TrainReport& report) {
  std::string s = "iteration,loss,k_r,k_kl\n";
  for (std::size_t i = 0; i < report.loss_curve.size(); ++i) {
    s += std::to_string(i) + "," + Num(report.loss_curve[i]) + "," +
         std::to_string(report.regression_steps.at(i)) + "," +
         std::to_string(report.critic_steps.at(i)) + "\n";
  }
  return s;
}

// Training data for the fit commands: a CSV file or a generated toy set.
struct FitData {
  Dataset data;
  std::optional<ToyFunction> truth;
};

FitData LoadFitData(const json& c, Rng& rng) {
  if (!c.at("csv").is_null()) {
    const std::string path = c.at("csv").get<std::string>();
    return {DatasetFromCsv(ReadFile(path), path), std::nullopt};
  }
  ToySpec spec{ParseToyFunction(c.at("model").get<std::string>()),
               ParseNoise(c.at("noise").get<std::string>()),
               c.at("n").get<std::size_t>()};
  ToyData toy = GenerateToy(spec, rng);
  return {std::move(toy.data), toy.truth};
}

// Regression curve on a uniform grid over [-1, 1], the toy regressor range.
struct Curve {
  std::vector<double> grid;
  std::vector<double> truth;
  std::vector<double> fit;
};

json ErrorsJson(const PointwiseErrors& e) { return {{"mse", e.mse}, {"mae", e.mae}}; }

// ---------------------------------------------------------------------------
// estimate-mi

void EstimateMiCommand(const json& c, std::ostream& out) {
  const fs::path dir = OutDir(c);
  Rng rng(Seed(c));
  auto [data_rng, fit_rng] = rng.Split();
  Matrix x, y;
  json report;
  if (!c.at("csv").is_null()) {
    const std::string path = c.at("csv").get<std::string>();
    const Dataset d = DatasetFromCsv(ReadFile(path), path);
    x = d.u;
    y = Matrix::Column(d.z);
    report["source"] = path;
  } else {
    const std::string demo = c.at("demo").get<std::string>();
    const std::size_t n = c.at("n").get<std::size_t>();
    if (n == 0) throw SpecError("--n must be positive");
    double rho = c.at("rho").get<double>();
    if (demo == "independent") {
      rho = 0.0;
    } else if (demo != "gaussian" && demo != "identity") {
      throw SpecError("unknown demo '" + demo + "' (gaussian, independent, identity)");
    }
    if (demo == "gaussian" && !(std::abs(rho) < 1.0)) {
      throw ParameterError("--rho must lie in (-1, 1)");
    }
    x = Matrix(n, 1);
    y = Matrix(n, 1);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = data_rng.StandardNormal();
    for (std::size_t i = 0; i < n; ++i) {
      y(i, 0) = demo == "identity"
                    ? x(i, 0)
                    : rho * x(i, 0) + std::sqrt(1.0 - rho * rho) * data_rng.StandardNormal();
    }
    report["source"] = demo;
    if (demo != "identity") {
      report["rho"] = rho;
      report["true_mi_nats"] = -0.5 * std::log(1.0 - rho * rho);
    }
  }
  const MineConfig cfg = MineConfigFromJson(c.at("mine"));
  const MineEstimate est = EstimateMi(x, y, cfg, fit_rng);
  report["n"] = x.rows();
  report["mi_nats"] = est.mi_nats;
  report["mi_clamped"] = est.clamped();
  report["iterations"] = est.iterations;
  report["seed"] = Seed(c);
  report["stream_seed"] = est.seed;
  WriteJson(dir / "mi_report.json", report);
  WriteFile(dir / "mi_loss_curve.csv", LossCurveCsv(est.loss_curve));
  out << report.dump() << "\n";
}

// ---------------------------------------------------------------------------
// ador-fit / adose-fit

Curve AdorCurve(const AdorModel& model, const ToyFunction& truth) {
  Curve curve{UniformGrid(-1.0, 1.0, kCurvePoints), {}, {}};
  curve.truth = truth.Evaluate(curve.grid);
  curve.fit = AdorPredict(model, Matrix::Column(curve.grid));
  return curve;
}

std::string CurveCsv(const Curve& curve) {
  std::string s = "x,truth,fit\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    s += Num(curve.grid[i]) + "," + Num(curve.truth[i]) + "," + Num(curve.fit[i]) + "\n";
  }
  return s;
}

void AdorFitCommand(const json& c, std::ostream& out) {
  const fs::path dir = OutDir(c);
  Rng rng(Seed(c));
  auto [data_rng, rest] = rng.Split();
  auto [train_rng, audit_rng] = rest.Split();
  const FitData fd = LoadFitData(c, data_rng);
  const AdorModel model = AdorTrain(fd.data, AdorConfigFromJson(c.at("ador")), train_rng);
  const std::vector<double> pred = AdorPredict(model, fd.data.u);

  json report = {{"method", "ador"},
                 {"n", fd.data.size()},
                 {"final_divergence", model.report.final_divergence},
                 {"errors", ErrorsJson(ComputePointwiseErrors(pred, fd.data.z))}};
  if (fd.truth) {
    const Curve curve = AdorCurve(model, *fd.truth);
    report["ise"] = IntegratedSquaredError(curve.fit, curve.truth, curve.grid);
    WriteFile(dir / "curve.csv", CurveCsv(curve));
  }
  if (c.at("audit_enabled").get<bool>()) {
    const MineEstimate audit = ResidualMiAudit(
        model, fd.data, MineConfigFromJson(c.at("audit")), audit_rng);
    report["residual_mi_nats"] = audit.mi_nats;
  }
  WriteJson(dir / "model.json", AdorModelToJson(model, Timing(c)));
  WriteJson(dir / "report.json", report);
  WriteFile(dir / "loss_curve.csv", LossCurveCsv(model.report.loss_curve));
  WriteFile(dir / "predictions.csv", PredictionsCsv(fd.data, pred));
  out << report.dump() << "\n";
}

void AdoseFitCommand(const json& c, std::ostream& out) {
  const fs::path dir = OutDir(c);
  Rng rng(Seed(c));
  auto [data_rng, rest] = rng.Split();
  auto [train_rng, eval_rng] = rest.Split();
  const FitData fd = LoadFitData(c, data_rng);
  const AdoseModel model =
      AdoseTrain(fd.data, AdoseConfigFromJson(c.at("adose")), train_rng);
  const std::size_t mean_draws = c.at("mean_draws").get<std::size_t>();
  const std::size_t draws = c.at("draws").get<std::size_t>();
  if (mean_draws == 0) throw SpecError("--mean-draws must be positive");
  const std::vector<double> pred = ConditionalMeans(model, fd.data.u, mean_draws, eval_rng);

  json report = {{"method", "adose"},
                 {"n", fd.data.size()},
                 {"final_divergence", model.report.final_divergence},
                 {"errors", ErrorsJson(ComputePointwiseErrors(pred, fd.data.z))}};
  if (fd.truth) {
    Curve curve{UniformGrid(-1.0, 1.0, kCurvePoints), {}, {}};
    curve.truth = fd.truth->Evaluate(curve.grid);
    curve.fit = ConditionalMeans(model, Matrix::Column(curve.grid), mean_draws, eval_rng);
    report["ise"] = IntegratedSquaredError(curve.fit, curve.truth, curve.grid);
    WriteFile(dir / "curve.csv", CurveCsv(curve));
  }
  std::string samples = UHeader(fd.data.dim()) + ",z_hat\n";
  for (std::size_t r = 0; r < fd.data.size(); ++r) {
    const std::string u = URow(fd.data.u, r);
    for (double z : AdoseSample(model, fd.data.u.row(r), draws, eval_rng)) {
      samples += u + "," + Num(z) + "\n";
    }
  }
  WriteJson(dir / "model.json", AdoseModelToJson(model, Timing(c)));
  WriteJson(dir / "report.json", report);
  WriteFile(dir / "loss_curve.csv", StepsCsv(model.report));
  WriteFile(dir / "predictions.csv", PredictionsCsv(fd.data, pred));
  WriteFile(dir / "samples.csv", samples);
  out << report.dump() << "\n";
}

// ---------------------------------------------------------------------------
// toy-benchmark

struct ToyResult {
  std::string model;
  std::string noise;
  std::string method;
  PointwiseErrors errors;
  double ise = 0.0;
  double divergence = 0.0;  // final smoothed training loss (nan for nnmse)
  Curve curve;
};

ToyResult RunToyCell(const json& c, const std::string& model, const std::string& noise,
                     const std::string& method) {
  const std::uint64_t seed = Seed(c);
  const std::string cell = model + "|" + noise;
  ToySpec spec{ParseToyFunction(model), ParseNoise(noise), c.at("n").get<std::size_t>()};
  Rng data_rng = LabelledRng(seed, "data|" + cell);
  const ToyData toy = GenerateToy(spec, data_rng);
  Rng rng = LabelledRng(seed, "fit|" + cell + "|" + method);

  ToyResult res{model, noise, method, {}, 0.0, std::nan(""), {}};
  res.curve.grid = UniformGrid(-1.0, 1.0, kCurvePoints);
  res.curve.truth = toy.truth.Evaluate(res.curve.grid);
  const Matrix grid_u = Matrix::Column(res.curve.grid);
  std::vector<double> pred;
  if (method == "ador") {
    const AdorModel m = AdorTrain(toy.data, AdorConfigFromJson(c.at("ador")), rng);
    pred = AdorPredict(m, toy.data.u);
    res.curve.fit = AdorPredict(m, grid_u);
    res.divergence = m.report.final_divergence;
  } else if (method == "adose") {
    const AdoseModel m = AdoseTrain(toy.data, AdoseConfigFromJson(c.at("adose")), rng);
    const std::size_t draws = c.at("mean_draws").get<std::size_t>();
    pred = ConditionalMeans(m, toy.data.u, draws, rng);
    res.curve.fit = ConditionalMeans(m, grid_u, draws, rng);
    res.divergence = m.report.final_divergence;
  } else if (method == "nnmse") {
    const MseFit f = FitMseBaseline(toy.data, MseConfigFromJson(c.at("mse")), rng);
    pred = MsePredict(f, toy.data.u);
    res.curve.fit = MsePredict(f, grid_u);
  } else {
    throw SpecError("unknown method '" + method + "' (ador, adose, nnmse)");
  }
  res.errors = ComputePointwiseErrors(pred, toy.data.z);
  res.ise = IntegratedSquaredError(res.curve.fit, res.curve.truth, res.curve.grid);
  return res;
}

void ToyBenchmarkCommand(const json& c, std::ostream& out) {
  const fs::path dir = OutDir(c);
  std::vector<std::pair<std::string, std::string>> cells;
  for (const json& cell : c.at("cells")) {
    cells.emplace_back(cell.at("model").get<std::string>(), cell.at("noise").get<std::string>());
  }
  std::vector<std::string> methods;
  for (const std::string& m : kMethods) {
    for (const json& want : c.at("methods")) {
      if (want.get<std::string>() == m) methods.push_back(m);
    }
  }
  for (const json& want : c.at("methods")) {
    if (std::find(kMethods.begin(), kMethods.end(), want.get<std::string>()) == kMethods.end()) {
      throw SpecError("unknown method '" + want.get<std::string>() + "' (ador, adose, nnmse)");
    }
  }
  if (cells.empty() || methods.empty()) throw SpecError("toy-benchmark has nothing to run");
  for (const auto& [model, noise] : cells) {  // fail fast on typos
    ParseToyFunction(model);
    ParseNoise(noise);
  }

  std::vector<ToyResult> results(cells.size() * methods.size());
  ParallelFor(results.size(), c.at("workers").get<std::size_t>(), [&](std::size_t i) {
    const auto& [model, noise] = cells[i / methods.size()];
    results[i] = RunToyCell(c, model, noise, methods[i % methods.size()]);
  });

  std::string longform = "model,noise,method,mse,mae,ise,final_divergence\n";
  for (const ToyResult& r : results) {
    longform += r.model + ",\"" + r.noise + "\"," + r.method + "," + Num(r.errors.mse) +
                "," + Num(r.errors.mae) + "," + Num(r.ise) + "," +
                (std::isnan(r.divergence) ? std::string() : Num(r.divergence)) + "\n";
  }
  std::string wide = "metric,method";
  for (const auto& cell : cells) wide += "," + cell.first;
  wide += "\n";
  const char* metrics[] = {"mse", "mae", "ise"};
  for (const char* metric : metrics) {
    for (std::size_t k = 0; k < methods.size(); ++k) {
      wide += std::string(metric) + "," + methods[k];
      for (std::size_t j = 0; j < cells.size(); ++j) {
        const ToyResult& r = results[j * methods.size() + k];
        const std::string name = metric;
        const double v = name == "mse" ? r.errors.mse : name == "mae" ? r.errors.mae : r.ise;
        wide += "," + Sci(v);
      }
      wide += "\n";
    }
  }
  for (std::size_t j = 0; j < cells.size(); ++j) {
    std::string s = "x,truth";
    for (const std::string& m : methods) s += "," + m;
    s += "\n";
    const Curve& base = results[j * methods.size()].curve;
    for (std::size_t i = 0; i < base.grid.size(); ++i) {
      s += Num(base.grid[i]) + "," + Num(base.truth[i]);
      for (std::size_t k = 0; k < methods.size(); ++k) {
        s += "," + Num(results[j * methods.size() + k].curve.fit[i]);
      }
      s += "\n";
    }
    WriteFile(dir / ("curves_" + cells[j].first + ".csv"), s);
  }
  WriteFile(dir / "results.csv", longform);
  WriteFile(dir / "table1.csv", wide);
  out << wide;
}

// ---------------------------------------------------------------------------
// distribution-demo

void DistributionDemoCommand(const json& c, std::ostream& out) {
  const fs::path dir = OutDir(c);
  const std::size_t n = c.at("n").get<std::size_t>();
  const std::size_t samples = c.at("samples").get<std::size_t>();
  const std::size_t u_bins = c.at("u_bins").get<std::size_t>();
  const std::size_t z_bins = c.at("z_bins").get<std::size_t>();
  if (samples == 0) throw SpecError("--samples must be positive");

  Rng rng(Seed(c));
  auto [data_rng, rest] = rng.Split();
  auto [train_rng, eval_rng] = rest.Split();
  const Dataset train = GenerateNonadditive(n, data_rng);
  const AdoseModel model = AdoseTrain(train, AdoseConfigFromJson(c.at("adose")), train_rng);

  const Dataset truth = GenerateNonadditive(samples, eval_rng);
  const Dataset reference = GenerateNonadditive(samples, eval_rng);
  const Matrix queries = Matrix::Column(
      Sample(NonadditiveRegressorLaw(), samples, eval_rng));
  const std::vector<double> generated = AdoseSampleRows(model, queries, eval_rng);

  const BinGrid grid = MakeBinGrid(truth.u.values(), truth.z, u_bins, z_bins);
  const BinnedConditional true_bins = BinConditional(truth.u.values(), truth.z, grid);
  const BinnedConditional ref_bins = BinConditional(reference.u.values(), reference.z, grid);
  const BinnedConditional model_bins = BinConditional(queries.values(), generated, grid);
  const double l1 = ConditionalL1(model_bins, true_bins);
  const double floor = ConditionalL1(ref_bins, true_bins);

  json summary = {{"n_train", n},
                  {"samples", samples},
                  {"u_bins", u_bins},
                  {"z_bins", z_bins},
                  {"conditional_l1", l1},
                  {"noise_floor", floor},
                  {"ratio", l1 / floor},
                  {"final_divergence", model.report.final_divergence}};
  WriteFile(dir / "true_conditional.csv", BinnedToCsv(true_bins));
  WriteFile(dir / "adose_conditional.csv", BinnedToCsv(model_bins));
  WriteFile(dir / "reference_conditional.csv", BinnedToCsv(ref_bins));
  WriteFile(dir / "loss_curve.csv", StepsCsv(model.report));
  WriteJson(dir / "model.json", AdoseModelToJson(model, Timing(c)));
  WriteJson(dir / "summary.json", summary);
  out << summary.dump() << "\n";
}

// ---------------------------------------------------------------------------
// cep-benchmark

DirectionConfig DirectionConfigFromJson(const json& c) {
  DirectionConfig cfg;
  const std::string method = c.at("method").get<std::string>();
  if (method == "ador") {
    cfg.method = RegressionMethod::kAdor;
  } else if (method == "adose") {
    cfg.method = RegressionMethod::kAdose;
  } else {
    throw SpecError("cep-benchmark --method must be ador or adose, got '" + method + "'");
  }
  cfg.ador = AdorConfigFromJson(c.at("ador"));
  cfg.adose = AdoseConfigFromJson(c.at("adose"));
  cfg.audit = MineConfigFromJson(c.at("audit"));
  cfg.adose_mean_draws = c.at("mean_draws").get<std::size_t>();
  cfg.low_confidence_threshold = c.at("low_confidence_threshold").get<double>();
  return cfg;
}

struct PairOutcome {
  std::optional<DirectionVerdict> verdict;
  std::string error;
};

void CepBenchmarkCommand(const json& c, std::ostream& out) {
  if (c.at("pairs_dir").is_null()) {
    throw SpecError("no pairs directory: pass --pairs-dir or set ADOR_PAIRS_DIR");
  }
  const fs::path pairs_dir = c.at("pairs_dir").get<std::string>();
  const fs::path meta = c.at("meta").is_null() ? pairs_dir / "pairmeta.txt"
                                               : fs::path(c.at("meta").get<std::string>());
  const std::string convention = c.at("aupr_convention").get<std::string>();
  if (convention != "confidence" && convention != "signed") {
    throw SpecError("--aupr-convention must be confidence or signed");
  }
  const DirectionConfig cfg = DirectionConfigFromJson(c);
  const fs::path dir = OutDir(c);

  PairsLoadResult loaded = LoadPairs(pairs_dir, meta);
  std::vector<PairsRecord>& pairs = loaded.records;
  if (!c.at("limit").is_null()) {
    const std::size_t limit = c.at("limit").get<std::size_t>();
    if (pairs.size() > limit) pairs.resize(limit);
  }
  if (pairs.empty()) throw DataError("no usable pairs in " + pairs_dir.string());

  const std::uint64_t seed = Seed(c);
  std::vector<PairOutcome> outcomes(pairs.size());
  ParallelFor(pairs.size(), c.at("workers").get<std::size_t>(), [&](std::size_t i) {
    Rng rng = LabelledRng(seed, "pair|" + pairs[i].id);
    try {
      outcomes[i].verdict = DirectionScore(pairs[i].x, pairs[i].y, cfg, rng);
    } catch (const Error& e) {
      // A pair that cannot be fitted is reported and excluded.
      outcomes[i].error = e.what();
    }
  });

  std::string lines;
  std::vector<double> abs_scores, signed_scores;
  std::vector<bool> correct_labels, truth_labels;
  double weight_total = 0.0, weight_correct = 0.0;
  std::size_t correct = 0, scored = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairsRecord& p = pairs[i];
    json row = {{"id", p.id},
                {"n", p.x.size()},
                {"truth", ToString(p.ground_truth)},
                {"weight", p.weight}};
    if (const auto& v = outcomes[i].verdict) {
      const bool ok = v->verdict == p.ground_truth;
      row["score_s"] = v->score_s;
      row["mi_forward"] = v->mi_forward;
      row["mi_backward"] = v->mi_backward;
      row["verdict"] = ToString(v->verdict);
      row["correct"] = ok;
      row["low_confidence"] = v->low_confidence;
      ++scored;
      correct += ok;
      weight_total += p.weight;
      weight_correct += ok ? p.weight : 0.0;
      abs_scores.push_back(std::abs(v->score_s));
      correct_labels.push_back(ok);
      signed_scores.push_back(v->score_s);
      truth_labels.push_back(p.ground_truth == CausalDirection::kXtoY);
    } else {
      row["error"] = outcomes[i].error;
    }
    lines += row.dump() + "\n";
  }
  auto aupr_or_null = [](const std::vector<double>& s, const std::vector<bool>& l) -> json {
    if (std::find(l.begin(), l.end(), true) == l.end()) return nullptr;
    return Aupr(s, l);
  };
  json summary = {
      {"pairs_discovered", loaded.files_discovered},
      {"pairs_run", pairs.size()},
      {"pairs_scored", scored},
      {"pairs_failed", pairs.size() - scored},
      {"correct", correct},
      {"accuracy", scored ? json(static_cast<double>(correct) / scored) : json(nullptr)},
      {"weighted_accuracy", weight_total > 0 ? json(weight_correct / weight_total) : json(nullptr)},
      {"aupr_confidence", aupr_or_null(abs_scores, correct_labels)},
      {"aupr_signed", aupr_or_null(signed_scores, truth_labels)},
      {"aupr_convention", convention},
  };
  summary["aupr"] = summary["aupr_" + convention];
  json skipped = json::array();
  for (const SkippedPair& s : loaded.skipped) skipped.push_back({{"id", s.id}, {"reason", s.reason}});
  summary["skipped"] = skipped;
  WriteFile(dir / "verdicts.jsonl", lines);
  WriteJson(dir / "summary.json", summary);
  json brief = summary;
  brief.erase("skipped");
  out << brief.dump() << "\n";
}

json Base(const std::string& command) {
  return {{"command", command}, {"seed", 1u}, {"out", "out/" + command}, {"timing", false}};
}

}  // namespace

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {"estimate-mi",   "ador-fit",
                                                 "adose-fit",     "toy-benchmark",
                                                 "distribution-demo", "cep-benchmark"};
  return names;
}

Rng LabelledRng(std::uint64_t seed, const std::string& label) {
  return Rng(MixSeed(seed ^ Fnv1a(label)));
}

json DefaultConfig(const std::string& command) {
  json c = Base(command);
  if (command == "estimate-mi") {
    c["demo"] = "gaussian";
    c["rho"] = 0.9;
    c["n"] = 5000u;
    c["csv"] = nullptr;
    c["mine"] = ToJson(MineConfig{});
  } else if (command == "ador-fit" || command == "adose-fit") {
    c["csv"] = nullptr;
    c["model"] = "square";
    c["noise"] = "exp:1";
    c["n"] = 300u;
    if (command == "ador-fit") {
      c["ador"] = ToJson(AdorConfig{});
      c["audit_enabled"] = true;
      c["audit"] = ToJson(ResidualAuditDefaults());
    } else {
      c["adose"] = ToJson(AdoseConfig{});
      c["draws"] = 1u;
      c["mean_draws"] = 5000u;
    }
  } else if (command == "toy-benchmark") {
    json cells = json::array();
    for (const TableCell& cell : kToyTable) cells.push_back({{"model", cell.model}, {"noise", cell.noise}});
    c["cells"] = cells;
    c["methods"] = kMethods;
    c["n"] = 300u;
    c["mean_draws"] = 5000u;
    c["workers"] = 1u;
    c["ador"] = ToJson(AdorConfig{});
    c["adose"] = ToJson(AdoseConfig{});
    MseConfig mse;
    mse.batch = 2 * AdorConfig{}.batch_half_b;  // same rows per step as AdOR
    mse.iterations = AdorConfig{}.iterations;
    c["mse"] = ToJson(mse);
  } else if (command == "distribution-demo") {
    c["n"] = 1000u;
    c["samples"] = 100000u;
    c["u_bins"] = 40u;
    c["z_bins"] = 50u;
    c["adose"] = ToJson(AdoseConfig{});
  } else if (command == "cep-benchmark") {
    const DirectionConfig d;
    c["pairs_dir"] = nullptr;
    c["meta"] = nullptr;
    c["limit"] = nullptr;
    c["workers"] = 1u;
    c["method"] = "ador";
    c["aupr_convention"] = "confidence";
    c["ador"] = ToJson(d.ador);
    c["adose"] = ToJson(d.adose);
    c["audit"] = ToJson(d.audit);
    c["mean_draws"] = d.adose_mean_draws;
    c["low_confidence_threshold"] = d.low_confidence_threshold;
  } else {
    throw SpecError("unknown subcommand '" + command + "'");
  }
  return c;
}

void Execute(const json& config, std::ostream& out) {
  const std::string command = config.at("command").get<std::string>();
  if (command == "estimate-mi") {
    EstimateMiCommand(config, out);
  } else if (command == "ador-fit") {
    AdorFitCommand(config, out);
  } else if (command == "adose-fit") {
    AdoseFitCommand(config, out);
  } else if (command == "toy-benchmark") {
    ToyBenchmarkCommand(config, out);
  } else if (command == "distribution-demo") {
    DistributionDemoCommand(config, out);
  } else if (command == "cep-benchmark") {
    CepBenchmarkCommand(config, out);
  } else {
    throw SpecError("unknown subcommand '" + command + "'");
  }
}

}  // namespace ador::cli
