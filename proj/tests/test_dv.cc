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

#include "ador/dv.h"
#include "ador/errors.h"
#include "ador/random.h"
#include "doctest.h"

namespace ador {
namespace {

// Direct transcription of mean(t_joint) - log(mean(exp(t_marginal))),
// valid for moderate inputs.
double NaiveDv(const std::vector<double>& tj, const std::vector<double>& tm) {
  double a = 0.0, e = 0.0;
  for (double v : tj) a += v;
  for (double v : tm) e += std::exp(v);
  return a / tj.size() - std::log(e / tm.size());
}

// Multiples of 1/64 in [-10, 10]: adding an integer shift up to 1e6 and
// subtracting the batch maximum are then exact in binary64.
std::vector<double> Dyadic(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = (static_cast<double>(rng.UniformIndex(1281)) - 640.0) / 64.0;
  return v;
}

TEST_SUITE("dv") {
  TEST_CASE("reference values") {
    for (double c : {-3.0, 0.0, 2.5, 1000.0}) {
      CHECK(DvLoss(std::vector<double>{c, c}, std::vector<double>{c, c}) == 0.0);
    }
    CHECK(DvLoss(std::vector<double>{1, 1}, std::vector<double>{0, 0}) == 1.0);
    CHECK(DvLoss(std::vector<double>{1001, 1001}, std::vector<double>{1000, 1000}) == 1.0);
  }

  TEST_CASE("agrees with the naive formula on moderate inputs") {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
      std::vector<double> tj(8), tm(8);
      for (double& v : tj) v = rng.StandardNormal() * 3;
      for (double& v : tm) v = rng.StandardNormal() * 3;
      CHECK(DvLoss(tj, tm) == doctest::Approx(NaiveDv(tj, tm)).epsilon(1e-12));
    }
  }

  TEST_CASE("common shifts leave the loss unchanged") {
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
      const std::size_t b = 2 + rng.UniformIndex(63);
      const auto tj = Dyadic(b, rng), tm = Dyadic(b, rng);
      const double base = DvLoss(tj, tm);
      for (double c : {-1e6, -12345.0, 1.0, 1e3, 1e6}) {
        std::vector<double> sj = tj, sm = tm;
        for (double& v : sj) v += c;
        for (double& v : sm) v += c;
        CHECK(std::abs(DvLoss(sj, sm) - base) <= 1e-12);
      }
    }
  }

  TEST_CASE("no overflow or underflow far from zero") {
    CHECK(DvLoss(std::vector<double>{800, 700}, std::vector<double>{750, 790}) ==
          doctest::Approx(NaiveDv({100, 0}, {50, 90})).epsilon(1e-12));
    // Joint half ~1000 nats above the marginal half: exp(t - max) underflows
    // for every marginal entry, the loss must still be finite.
    const double loss = DvLoss(std::vector<double>{1000, 1000}, std::vector<double>{0, -1});
    CHECK(loss == doctest::Approx(1000 - std::log((1 + std::exp(-1.0)) / 2)).epsilon(1e-14));
  }

  TEST_CASE("gradient matches central differences") {
    Rng rng(3);
    std::vector<double> tj(6), tm(6);
    for (double& v : tj) v = rng.StandardNormal();
    for (double& v : tm) v = rng.StandardNormal();
    const DvLossGrad g = DvLossWithGrad(tj, tm);
    CHECK(g.loss == DvLoss(tj, tm));
    const double h = 1e-6;
    for (std::size_t i = 0; i < 6; ++i) {
      auto a = tj, b = tj;
      a[i] += h;
      b[i] -= h;
      CHECK(g.d_joint[i] == doctest::Approx((DvLoss(a, tm) - DvLoss(b, tm)) / (2 * h)).epsilon(1e-8));
      auto c = tm, d = tm;
      c[i] += h;
      d[i] -= h;
      CHECK(g.d_marginal[i] ==
            doctest::Approx((DvLoss(tj, c) - DvLoss(tj, d)) / (2 * h)).epsilon(1e-8));
    }
    double sum = 0.0;
    for (double v : g.d_marginal) sum += v;
    CHECK(sum == doctest::Approx(-1.0).epsilon(1e-14));
  }

  TEST_CASE("Jensen: identical halves never score above zero") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> v(10);
      for (double& x : v) x = rng.StandardNormal();
      CHECK(DvLoss(v, v) <= 0.0);
    }
  }

  TEST_CASE("invalid batches") {
    CHECK_THROWS_AS(DvLoss(std::vector<double>{1}, std::vector<double>{1}), SpecError);
    CHECK_THROWS_AS(DvLoss(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), SpecError);
    CHECK_THROWS_AS(DvLoss(std::vector<double>{1, NAN}, std::vector<double>{1, 2}), NumericError);
    CHECK_THROWS_AS(DvLoss(std::vector<double>{1, 2}, std::vector<double>{INFINITY, 2}), NumericError);
  }

  TEST_CASE("marginal pairing follows the i + b rule") {
    const Matrix u(4, 1, std::vector<double>{10, 20, 30, 40});
    const Matrix eps(4, 1, std::vector<double>{1, 2, 3, 4});
    const PairedBatch p = MarginalPairing(u, eps);
    CHECK(p.joint == Matrix(2, 2, std::vector<double>{1, 10, 2, 20}));
    CHECK(p.marginal == Matrix(2, 2, std::vector<double>{3, 10, 4, 20}));
    const PairedBatch again = MarginalPairing(u, eps);
    CHECK(again.joint == p.joint);
    CHECK(again.marginal == p.marginal);
  }

  TEST_CASE("constant residuals make joint and marginal identical") {
    const Matrix u(6, 2, std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    const PairedBatch p = MarginalPairing(u, Matrix(6, 1, 0.5));
    CHECK(p.joint == p.marginal);
  }

  TEST_CASE("pairing rejects bad shapes") {
    CHECK_THROWS_AS(MarginalPairing(Matrix(5, 1), Matrix(5, 1)), SpecError);
    CHECK_THROWS_AS(MarginalPairing(Matrix(2, 1), Matrix(2, 1)), SpecError);
    CHECK_THROWS_AS(MarginalPairing(Matrix(4, 1), Matrix(6, 1)), SpecError);
  }
}

}  // namespace
}  // namespace ador
