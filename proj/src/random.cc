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

#include "ador/random.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ador/errors.h"

namespace ador {

std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::UniformOpen0() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::StandardNormal() {
  const double radius = std::sqrt(-2.0 * std::log(UniformOpen0()));
  return radius * std::cos(2.0 * std::numbers::pi * Uniform01());
}

std::size_t Rng::UniformIndex(std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  // Reject the top partial bucket so every index is equally likely.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return static_cast<std::size_t>(x % bound);
}

std::pair<Rng, Rng> Rng::Split() {
  const std::uint64_t a = engine_();
  const std::uint64_t b = engine_();
  return {Rng(MixSeed(a ^ 0x5851f42d4c957f2dULL)),
          Rng(MixSeed(b ^ 0x14057b7ef767814fULL))};
}

std::pair<Rng, Rng> SplitRng(Rng& rng) { return rng.Split(); }

std::vector<std::size_t> SampleWithoutReplacement(std::size_t n, std::size_t k,
                                                  Rng& rng) {
  if (k > n) throw SpecError("cannot draw more indices than available");
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.UniformIndex(n - i)]);
  }
  pool.resize(k);
  return pool;
}

DistSpec DistSpec::MakeUniform(double lo, double hi) {
  return DistSpec(Uniform{lo, hi});
}
DistSpec DistSpec::MakeNormal(double mean, double sd) {
  return DistSpec(Normal{mean, sd});
}
DistSpec DistSpec::MakeExponential(double rate) {
  return DistSpec(Exponential{rate});
}
DistSpec DistSpec::MakeChiSquare(int dof) { return DistSpec(ChiSquare{dof}); }
DistSpec DistSpec::MakeRayleigh(double scale) {
  return DistSpec(Rayleigh{scale});
}
DistSpec DistSpec::MakeBinomial(int trials, double prob) {
  return DistSpec(Binomial{trials, prob});
}
DistSpec DistSpec::MakeLogNormal(double mu, double sigma) {
  return DistSpec(LogNormal{mu, sigma});
}
DistSpec DistSpec::MakeShifted(DistSpec inner, double offset) {
  return DistSpec(
      Shifted{std::make_shared<const DistSpec>(std::move(inner)), offset});
}

namespace {

void Require(bool ok, const char* what) {
  if (!ok) throw ParameterError(std::string("invalid distribution: ") + what);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void DistSpec::Validate() const {
  std::visit(
      Overloaded{
          [](const Uniform& d) {
            Require(std::isfinite(d.lo) && std::isfinite(d.hi) && d.hi > d.lo,
                    "uniform needs hi > lo");
          },
          [](const Normal& d) {
            Require(std::isfinite(d.mean), "normal mean must be finite");
            Require(d.sd > 0 && std::isfinite(d.sd), "normal needs sd > 0");
          },
          [](const Exponential& d) {
            Require(d.rate > 0 && std::isfinite(d.rate),
                    "exponential needs rate > 0");
          },
          [](const ChiSquare& d) { Require(d.dof >= 1, "chi-square needs dof >= 1"); },
          [](const Rayleigh& d) {
            Require(d.scale > 0 && std::isfinite(d.scale),
                    "rayleigh needs scale > 0");
          },
          [](const Binomial& d) {
            Require(d.trials >= 1, "binomial needs trials >= 1");
            Require(d.prob >= 0 && d.prob <= 1, "binomial needs 0 <= prob <= 1");
          },
          [](const LogNormal& d) {
            Require(std::isfinite(d.mu), "lognormal mu must be finite");
            Require(d.sigma > 0 && std::isfinite(d.sigma),
                    "lognormal needs sigma > 0");
          },
          [](const Shifted& d) {
            Require(d.inner != nullptr, "shifted needs an inner law");
            Require(std::isfinite(d.offset), "shift offset must be finite");
            d.inner->Validate();
          },
      },
      value_);
}

std::string DistSpec::ToString() const {
  std::ostringstream os;
  std::visit(
      Overloaded{
          [&](const Uniform& d) { os << "uniform:" << d.lo << "," << d.hi; },
          [&](const Normal& d) { os << "normal:" << d.mean << "," << d.sd; },
          [&](const Exponential& d) { os << "exp:" << d.rate; },
          [&](const ChiSquare& d) { os << "chisq:" << d.dof; },
          [&](const Rayleigh& d) { os << "rayleigh:" << d.scale; },
          [&](const Binomial& d) { os << "binom:" << d.trials << "," << d.prob; },
          [&](const LogNormal& d) { os << "lognormal:" << d.mu << "," << d.sigma; },
          [&](const Shifted& d) {
            os << d.inner->ToString() << (d.offset < 0 ? "" : "+") << d.offset;
          },
      },
      value_);
  return os.str();
}

double SampleOne(const DistSpec& spec, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const DistSpec::Uniform& d) {
            return d.lo + (d.hi - d.lo) * rng.Uniform01();
          },
          [&](const DistSpec::Normal& d) {
            return d.mean + d.sd * rng.StandardNormal();
          },
          [&](const DistSpec::Exponential& d) {
            return -std::log(rng.UniformOpen0()) / d.rate;
          },
          [&](const DistSpec::ChiSquare& d) {
            double sum = 0.0;
            for (int k = 0; k < d.dof; ++k) {
              const double g = rng.StandardNormal();
              sum += g * g;
            }
            return sum;
          },
          [&](const DistSpec::Rayleigh& d) {
            // Inverse CDF: F(x) = 1 - exp(-x^2 / (2 scale^2)).
            return d.scale * std::sqrt(-2.0 * std::log(rng.UniformOpen0()));
          },
          [&](const DistSpec::Binomial& d) {
            int hits = 0;
            for (int k = 0; k < d.trials; ++k) hits += rng.Uniform01() < d.prob;
            return static_cast<double>(hits);
          },
          [&](const DistSpec::LogNormal& d) {
            return std::exp(d.mu + d.sigma * rng.StandardNormal());
          },
          [&](const DistSpec::Shifted& d) {
            return SampleOne(*d.inner, rng) + d.offset;
          },
      },
      spec.value());
}

std::vector<double> Sample(const DistSpec& spec, std::size_t n, Rng& rng) {
  if (n == 0) throw SpecError("Sample: n must be at least 1");
  spec.Validate();
  std::vector<double> out(n);
  for (double& v : out) v = SampleOne(spec, rng);
  return out;
}

}  // namespace ador
