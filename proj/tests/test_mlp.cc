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


#include <cmath>
#include <vector>

#include "ador/activation.h"
#include "ador/errors.h"
#include "ador/mlp.h"
#include "ador/mlp_json.h"
#include "ador/random.h"
#include "doctest.h"
#include "support/gradcheck.h"

namespace ador {
namespace {

Matrix RandomInput(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix x(rows, cols);
  for (double& v : x.values()) v = rng.StandardNormal();
  return x;
}

TEST_SUITE("nn") {
  TEST_CASE("activation values and derivatives") {
    const Activation t = Activation::Tanh(), s = Activation::Sigmoid(),
                     l = Activation::LeakyRelu(0.2), id = Activation::Identity();
    CHECK(t.Apply(0.3) == doctest::Approx(std::tanh(0.3)));
    CHECK(s.Apply(0.0) == 0.5);
    CHECK(l.Apply(-2.0) == doctest::Approx(-0.4));
    CHECK(l.Apply(3.0) == 3.0);
    CHECK(id.Apply(-7.5) == -7.5);
    for (double x : {-1.3, -0.2, 0.4, 2.1}) {
      const double h = 1e-6;
      for (const Activation& a : {t, s, l, id}) {
        const double fd = (a.Apply(x + h) - a.Apply(x - h)) / (2 * h);
        CHECK(a.Derivative(x, a.Apply(x)) == doctest::Approx(fd).epsilon(1e-7));
      }
    }
    CHECK(l.Derivative(0.0, 0.0) == 0.2);
  }

  TEST_CASE("leaky-ReLU is continuous at zero for any slope") {
    for (double slope : {0.01, 0.2, 0.5, 0.99}) {
      CHECK(Activation::LeakyRelu(slope).Apply(0.0) == 0.0);
    }
  }

  TEST_CASE("activation names round-trip") {
    for (auto k : {Activation::Kind::kTanh, Activation::Kind::kSigmoid,
                   Activation::Kind::kLeakyRelu, Activation::Kind::kIdentity}) {
      CHECK(ActivationKindFromString(ToString(k)) == k);
    }
    CHECK_THROWS_AS(ActivationKindFromString("relu6"), ParameterError);
  }

  TEST_CASE("layer specs are validated") {
    const std::size_t widths[] = {4, 3};
    const Activation acts[] = {Activation::Tanh(), Activation::Sigmoid()};
    const auto specs = BuildSpecs(2, widths, acts, 1, Activation::Identity(), false);
    REQUIRE(specs.size() == 3);
    CHECK(specs[0].in_width == 2);
    CHECK(specs[2].out_width == 1);
    CHECK_FALSE(specs[2].has_bias);
    CHECK(specs[1].has_bias);
    const Activation one[] = {Activation::Tanh()};
    CHECK_THROWS_AS(BuildSpecs(2, widths, one, 1, Activation::Identity(), true), SpecError);
    std::vector<LayerSpec> broken = specs;
    broken[1].in_width = 5;
    CHECK_THROWS_AS(ValidateSpecs(broken), SpecError);
    broken = specs;
    broken[0].activation = Activation::LeakyRelu(1.5);
    CHECK_THROWS_AS(ValidateSpecs(broken), SpecError);
    CHECK_THROWS_AS(ValidateSpecs(std::vector<LayerSpec>{}), SpecError);
  }

  TEST_CASE("Xavier initialization respects the Glorot bound and zeroes biases") {
    Rng rng(4);
    const std::size_t widths[] = {32, 16};
    const Activation acts[] = {Activation::Tanh(), Activation::LeakyRelu()};
    const auto specs = BuildSpecs(5, widths, acts, 1, Activation::Identity(), true);
    const MlpParams p = XavierInit(specs, rng);
    for (const DenseLayer& layer : p.layers) {
      const double bound = std::sqrt(6.0 / (layer.in_width() + layer.out_width()));
      double max_abs = 0.0;
      for (double w : layer.weight.values()) {
        CHECK(std::abs(w) <= bound);
        max_abs = std::max(max_abs, std::abs(w));
      }
      CHECK(max_abs > 0.5 * bound);  // the range is actually used
      for (double b : layer.bias) CHECK(b == 0.0);
    }
    CHECK(p.parameter_count() == 5 * 32 + 32 + 32 * 16 + 16 + 16 + 1);
  }

  TEST_CASE("forward pass is deterministic and shape-checked") {
    Rng rng(5);
    const MlpParams p = testing::RandomMlp(rng, 0);
    const Matrix x = RandomInput(7, p.in_width(), rng);
    const Matrix a = Predict(p, x), b = Predict(p, x);
    CHECK(a == b);
    CHECK(a.rows() == 7);
    CHECK(a.cols() == p.out_width());
    CHECK(Forward(p, x).output == a);
    CHECK_THROWS_AS(Predict(p, Matrix(3, p.in_width() + 1)), SpecError);
  }

  TEST_CASE("non-finite output raises NumericError") {
    Rng rng(6);
    MlpParams p = testing::RandomMlp(rng, 3);
    p.layers.back().weight(0, 0) = NAN;
    CHECK_THROWS_AS(Predict(p, Matrix(2, p.in_width(), 1.0)), NumericError);
  }

  TEST_CASE("backprop matches central differences on random networks") {
    Rng rng(7);
    for (std::size_t net = 0; net < 12; ++net) {
      CAPTURE(net);
      const MlpParams p = testing::RandomMlp(rng, net);
      const Matrix x = RandomInput(5, p.in_width(), rng);
      const Matrix g = RandomInput(5, p.out_width(), rng);
      const testing::GradCheck r = testing::CheckGradients(p, x, g);
      CHECK(r.checked > 0);
      CHECK(r.max_param_rel < 1e-6);
      CHECK(r.max_input_rel < 1e-6);
    }
  }

  TEST_CASE("backward rejects mismatched gradients") {
    Rng rng(8);
    const MlpParams p = testing::RandomMlp(rng, 1);
    const ForwardResult f = Forward(p, Matrix(3, p.in_width(), 0.5));
    CHECK_THROWS_AS(Backward(p, f.cache, Matrix(4, p.out_width())), SpecError);
  }

  TEST_CASE("gradient accumulation") {
    Rng rng(9);
    const MlpParams p = testing::RandomMlp(rng, 2);
    const Matrix x = RandomInput(4, p.in_width(), rng);
    const Matrix g = RandomInput(4, p.out_width(), rng);
    const BackwardResult b = Backward(p, Forward(p, x).cache, g);
    MlpGradients acc = MlpGradients::ZerosLike(p);
    AddInPlace(acc, b.params);
    AddInPlace(acc, b.params);
    for (std::size_t k = 0; k < p.layers.size(); ++k) {
      for (std::size_t i = 0; i < acc.weight[k].size(); ++i) {
        CHECK(acc.weight[k].values()[i] == 2 * b.params.weight[k].values()[i]);
      }
    }
  }

  TEST_CASE("JSON round trip preserves the network exactly") {
    Rng rng(10);
    for (std::size_t net = 0; net < 4; ++net) {
      const MlpParams p = testing::RandomMlp(rng, net);
      const MlpParams q = MlpFromJson(nlohmann::json::parse(MlpToJson(p).dump()));
      const Matrix x = RandomInput(3, p.in_width(), rng);
      CHECK(Predict(p, x) == Predict(q, x));
      CHECK(q.specs().size() == p.specs().size());
    }
    CHECK_THROWS_AS(MlpFromJson(nlohmann::json::parse(R"({"layers": 3})")), DataError);
    CHECK_THROWS_AS(MlpFromJson(nlohmann::json::parse(R"({"nope": []})")), DataError);
  }
}

}  // namespace
}  // namespace ador
