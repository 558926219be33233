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

#ifndef ADOR_RANDOM_H_
#define ADOR_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ador {

// Seeded generator. Every draw goes through the mt19937_64 engine, whose
// output sequence is fixed by the standard, and the transforms below are
// written out explicitly instead of using std::*_distribution (whose
// algorithms are implementation-defined). Identical seed and call sequence
// give identical streams on every platform.
//
// Single owner: parallel work must obtain streams through Split().
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform01();
  // Uniform on (0, 1].
  double UniformOpen0();
  // Standard normal by Box-Muller (cosine branch only, no cached value).
  double StandardNormal();
  // Uniform integer in [0, n). n must be positive.
  std::size_t UniformIndex(std::size_t n);

  // Draws two words from this generator and derives two child generators
  // from them. The parent advances by exactly two draws, so "split then
  // sample" and "sample then split" give different, fixed results.
  std::pair<Rng, Rng> Split();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// k distinct indices from [0, n) in random order (partial Fisher-Yates).
// Requires k <= n.
std::vector<std::size_t> SampleWithoutReplacement(std::size_t n, std::size_t k,
                                                  Rng& rng);

// Free-function form of Rng::Split.
std::pair<Rng, Rng> SplitRng(Rng& rng);

// SplitMix64 finalizer; used to derive child seeds.
std::uint64_t MixSeed(std::uint64_t x);

// Probability law for sampling. Parameters are validated by Validate()
// and by every sampler.
class DistSpec {
 public:
  struct Uniform { double lo, hi; };
  struct Normal { double mean, sd; };
  struct Exponential { double rate; };
  struct ChiSquare { int dof; };
  struct Rayleigh { double scale; };
  struct Binomial { int trials; double prob; };
  struct LogNormal { double mu, sigma; };
  struct Shifted {
    std::shared_ptr<const DistSpec> inner;
    double offset;
  };
  using Variant = std::variant<Uniform, Normal, Exponential, ChiSquare,
                               Rayleigh, Binomial, LogNormal, Shifted>;

  static DistSpec MakeUniform(double lo, double hi);
  static DistSpec MakeNormal(double mean, double sd);
  static DistSpec MakeExponential(double rate);
  static DistSpec MakeChiSquare(int dof);
  static DistSpec MakeRayleigh(double scale);
  static DistSpec MakeBinomial(int trials, double prob);
  static DistSpec MakeLogNormal(double mu, double sigma);
  static DistSpec MakeShifted(DistSpec inner, double offset);

  const Variant& value() const { return value_; }

  // Throws ParameterError when an invariant is violated.
  void Validate() const;

  // Compact text form, e.g. "exp:1" or "lognormal:1,0.6+1".
  std::string ToString() const;

 private:
  explicit DistSpec(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

// One draw. Parameters are assumed validated.
double SampleOne(const DistSpec& spec, Rng& rng);

// n i.i.d. draws. Throws ParameterError for invalid parameters and
// SpecError for n == 0.
std::vector<double> Sample(const DistSpec& spec, std::size_t n, Rng& rng);

}  // namespace ador

#endif  // ADOR_RANDOM_H_
