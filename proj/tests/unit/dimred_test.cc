// tests/unit/dimred_test.cc

// Copyright 2026  NeuroVox Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "neurovox/dimred/kpca.h"
#include "neurovox/dimred/pca.h"

#include <cmath>
#include <vector>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"
#include "support/oracle_eig.h"

namespace {

using neurovox::Matrix;
using neurovox::Rng;
using namespace neurovox::dimred;
using neurovox::testing::brute_kpca_projections;
using neurovox::testing::jacobi_eig;
using neurovox::testing::JacobiEig;

Matrix random_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix x(n, d);
  for (std::size_t i = 0; i < x.size(); ++i) x.data()[i] = rng.gaussian();
  return x;
}

void check_match_up_to_sign(const Matrix& got, const std::vector<std::vector<double>>& want,
                            double tol) {
  REQUIRE(got.rows() == want.size());
  CHECK(neurovox::testing::max_deviation_up_to_sign(got, want) < tol);
}

}  // namespace

TEST_SUITE("dimred") {

TEST_CASE("explained variance saturates at the true rank") {
  // Points on a random 2-D plane embedded in 5-D.
  Rng rng(4);
  Matrix x(40, 5);
  std::vector<double> u(5), w(5);
  for (auto& v : u) v = rng.gaussian();
  for (auto& v : w) v = rng.gaussian();
  for (std::size_t i = 0; i < 40; ++i) {
    const double a = rng.gaussian(), b = rng.gaussian();
    for (std::size_t c = 0; c < 5; ++c) x(i, c) = a * u[c] + b * w[c];
  }
  const auto curve = pca_explained_variance(x);
  REQUIRE(curve.size() == 5);
  CHECK(curve[1] == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i] >= curve[i - 1]);
  CHECK(curve.back() == 1.0);
}

TEST_CASE("isotropic data spreads variance evenly within 5%") {
  const std::size_t d = 8;
  const Matrix x = random_matrix(20000, d, 99);
  const auto curve = pca_explained_variance(x);
  for (std::size_t i = 0; i < d; ++i) {
    CHECK(std::abs(curve[i] - static_cast<double>(i + 1) / d) < 0.05);
  }
}

TEST_CASE("degenerate inputs are rejected") {
  Matrix one_row(1, 4, 1.0);
  CHECK_THROWS_AS(pca_explained_variance(one_row), std::invalid_argument);

  Matrix repeated(20, 4, 0.0);
  for (std::size_t i = 0; i < repeated.rows(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) repeated(i, c) = 0.1 * (c + 1);
  }
  CHECK_THROWS_AS(pca_explained_variance(repeated), std::invalid_argument);
}

TEST_CASE("kpca matches the brute-force centered-kernel oracle") {
  const Matrix x = random_matrix(10, 4, 17);
  KpcaParams params;
  params.gamma = 0.25;
  params.coef0 = 1.0;
  params.degree = 3;
  const KpcaModel model = kpca_fit(x, 3, params);
  REQUIRE(model.output_dim == 3);
  const auto want = brute_kpca_projections(x, 3, 0.25, 1.0, 3);
  check_match_up_to_sign(model.training_projections, want, 1e-8);
}

TEST_CASE("degree-1 unit-gamma kpca reduces to linear PCA") {
  const std::size_t n = 12, d = 5, k = 3;
  const Matrix x = random_matrix(n, d, 23);
  KpcaParams params;
  params.gamma = 1.0;
  params.coef0 = 1.0;  // centering cancels the constant offset
  params.degree = 1;
  const KpcaModel model = kpca_fit(x, k, params);

  // Linear-PCA oracle: Jacobi on the covariance, scores = centered X * v.
  std::vector<double> mean(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) mean[c] += x(i, c) / n;
  }
  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        cov[a][b] += (x(i, a) - mean[a]) * (x(i, b) - mean[b]);
      }
    }
  }
  const JacobiEig eig = jacobi_eig(cov);
  std::vector<std::vector<double>> scores(n, std::vector<double>(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        scores[i][j] += (x(i, c) - mean[c]) * eig.vectors[j][c];
      }
    }
  }
  check_match_up_to_sign(model.training_projections, scores, 1e-8);
}

TEST_CASE("two distinct points project symmetrically about zero") {
  Matrix x(2, 3);
  x(0, 0) = 1.0;
  x(0, 1) = 2.0;
  x(0, 2) = -1.0;
  x(1, 0) = -0.5;
  x(1, 1) = 0.25;
  x(1, 2) = 2.0;
  const KpcaModel model = kpca_fit(x, 1);
  REQUIRE(model.output_dim == 1);
  CHECK(model.training_projections(0, 0) ==
        doctest::Approx(-model.training_projections(1, 0)).epsilon(1e-10));
}

TEST_CASE("transforming the training matrix reproduces fit-time projections") {
  const Matrix x = random_matrix(15, 6, 31);
  const KpcaModel model = kpca_fit(x, 4);
  const Matrix again = kpca_transform(model, x);
  REQUIRE(again.rows() == 15);
  REQUIRE(again.cols() == model.output_dim);
  for (std::size_t i = 0; i < again.rows(); ++i) {
    for (std::size_t j = 0; j < again.cols(); ++j) {
      CHECK(again(i, j) ==
            doctest::Approx(model.training_projections(i, j)).epsilon(1e-10));
    }
  }

  // A duplicated training point lands on that point's projection.
  Matrix dup(1, 6);
  for (std::size_t c = 0; c < 6; ++c) dup(0, c) = x(7, c);
  const Matrix p = kpca_transform(model, dup);
  for (std::size_t j = 0; j < p.cols(); ++j) {
    CHECK(p(0, j) == doctest::Approx(model.training_projections(7, j)).epsilon(1e-10));
  }
}

TEST_CASE("out-of-sample transform matches the brute-force cross-kernel") {
  const Matrix x = random_matrix(12, 4, 51);
  const Matrix y = random_matrix(5, 4, 52);
  KpcaParams params;
  params.gamma = 0.5;
  const KpcaModel model = kpca_fit(x, 3, params);
  const Matrix got = kpca_transform(model, y);

  const std::size_t n = x.rows();
  // Uncentered training kernel statistics.
  std::vector<double> col_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t c = 0; c < 4; ++c) dot += x(i, c) * x(j, c);
      const double kv = std::pow(0.5 * dot + 1.0, 3);
      col_mean[j] += kv / n;
      grand += kv / (static_cast<double>(n) * n);
    }
  }
  for (std::size_t r = 0; r < y.rows(); ++r) {
    std::vector<double> kt(n);
    double row_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t c = 0; c < 4; ++c) dot += y(r, c) * x(i, c);
      kt[i] = std::pow(0.5 * dot + 1.0, 3);
      row_mean += kt[i] / n;
    }
    for (std::size_t j = 0; j < model.output_dim; ++j) {
      double proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        proj += (kt[i] - row_mean - col_mean[i] + grand) * model.alphas(i, j);
      }
      CHECK(got(r, j) == doctest::Approx(proj).epsilon(1e-8));
    }
  }
}

TEST_CASE("projection variance is ordered and signs are canonical") {
  const Matrix x = random_matrix(30, 6, 77);
  const KpcaModel model = kpca_fit(x, 5);
  for (std::size_t j = 0; j + 1 < model.output_dim; ++j) {
    double var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      var_a += model.training_projections(i, j) * model.training_projections(i, j);
      var_b += model.training_projections(i, j + 1) * model.training_projections(i, j + 1);
    }
    CHECK(var_a >= var_b - 1e-12);
  }
  // Fitting twice is bit-identical (sign canonicalization at work).
  const KpcaModel again = kpca_fit(x, 5);
  for (std::size_t i = 0; i < model.alphas.size(); ++i) {
    CHECK(model.alphas.data()[i] == again.alphas.data()[i]);
  }
  // Largest-magnitude entry of every component is positive.
  for (std::size_t j = 0; j < model.output_dim; ++j) {
    double best = 0.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if (std::abs(model.alphas(i, j)) > best) {
        best = std::abs(model.alphas(i, j));
        arg = i;
      }
    }
    CHECK(model.alphas(arg, j) > 0.0);
  }
}

TEST_CASE("guard rails: k range, finiteness, training cap, width checks") {
  const Matrix x = random_matrix(8, 3, 5);
  CHECK_THROWS_AS(kpca_fit(x, 9), std::invalid_argument);
  CHECK_THROWS_AS(kpca_fit(x, 0), std::invalid_argument);

  Matrix bad = x;
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(kpca_fit(bad, 2), std::invalid_argument);

  KpcaParams tight;
  tight.max_train_points = 5;
  CHECK_THROWS_AS(kpca_fit(x, 2, tight), std::invalid_argument);

  const KpcaModel model = kpca_fit(x, 2);
  const Matrix wrong_width = random_matrix(4, 2, 6);
  CHECK_THROWS_AS(kpca_transform(model, wrong_width), std::invalid_argument);
}

TEST_CASE("seeded subsampling is deterministic and capped") {
  const Matrix x = random_matrix(100, 3, 1);
  const Matrix a = subsample_rows(x, 40, 7);
  const Matrix b = subsample_rows(x, 40, 7);
  REQUIRE(a.rows() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.data()[i] == b.data()[i]);
  const Matrix c = subsample_rows(x, 200, 7);
  CHECK(c.rows() == 100);
}

}  // TEST_SUITE
