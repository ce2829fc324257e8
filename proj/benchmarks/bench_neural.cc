// benchmarks/bench_neural.cc

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

#include <benchmark/benchmark.h>

#include "neurovox/common/rng.h"
#include "neurovox/dimred/kpca.h"
#include "neurovox/models/lstm_regression.h"
#include "neurovox/neural/loss.h"

namespace {

using neurovox::Matrix;
using neurovox::Rng;
using neurovox::neural::Tensor3;

Tensor3 random_tensor(std::size_t b, std::size_t t, std::size_t f, std::uint64_t seed) {
  Rng rng(seed);
  Tensor3 x(b, t, f);
  for (auto& v : x.values) v = rng.gaussian();
  return x;
}

Matrix random_matrix(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix x(n, d);
  for (std::size_t i = 0; i < x.size(); ++i) x.data()[i] = rng.gaussian();
  return x;
}

// One forward+backward+update on the paper-sized regression stack.
void BM_LstmRegressionStep(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  neurovox::models::LstmRegressionModel model(13, 30);
  model.init(1);
  neurovox::neural::AdamState adam(model.params(), {});
  const Tensor3 x = random_tensor(batch, 100, 43, 2);
  const Tensor3 target = random_tensor(batch, 100, 13, 3);
  for (auto _ : state) {
    neurovox::models::LstmRegressionModel::Cache cache;
    const Tensor3 y = model.forward(x, &cache);
    const auto loss = neurovox::neural::mse_loss(y, target);
    model.zero_grads();
    model.backward(cache, loss.grad);
    adam.step(model.params());
    benchmark::DoNotOptimize(loss.value);
  }
}
BENCHMARK(BM_LstmRegressionStep)->Arg(4)->Arg(16);

void BM_KpcaFit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix x = random_matrix(n, 155, 5);
  for (auto _ : state) {
    auto model = neurovox::dimred::kpca_fit(x, 30);
    benchmark::DoNotOptimize(model.eigenvalues.data());
  }
}
BENCHMARK(BM_KpcaFit)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_KpcaTransform(benchmark::State& state) {
  const Matrix x = random_matrix(1024, 155, 5);
  const auto model = neurovox::dimred::kpca_fit(x, 30);
  const Matrix y = random_matrix(512, 155, 6);
  for (auto _ : state) {
    auto p = neurovox::dimred::kpca_transform(model, y);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_KpcaTransform)->Unit(benchmark::kMillisecond);

}  // namespace
