// tests/unit/neural_test.cc

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

#include <cmath>
#include <vector>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"
#include "neurovox/neural/adam.h"
#include "neurovox/neural/dense.h"
#include "neurovox/neural/gradcheck.h"
#include "neurovox/neural/loss.h"
#include "neurovox/neural/lstm.h"
#include "neurovox/neural/tensor.h"

namespace {

using neurovox::Rng;
using namespace neurovox::neural;

Tensor3 random_tensor(std::size_t b, std::size_t t, std::size_t f, std::uint64_t seed) {
  Rng rng(seed);
  Tensor3 x(b, t, f);
  for (auto& v : x.values) v = rng.gaussian();
  return x;
}

}  // namespace

TEST_SUITE("neural") {

TEST_CASE("zero-weight LSTM maps everything to zero") {
  LstmLayer layer(3, 4);  // weights default to zero
  const Tensor3 x = random_tensor(2, 5, 3, 1);
  const Tensor3 y = layer.forward(x);
  REQUIRE(y.batch == 2);
  REQUIRE(y.time == 5);
  REQUIRE(y.features == 4);
  for (double v : y.values) CHECK(v == 0.0);
}

TEST_CASE("single LSTM cell matches hand-evaluated gate arithmetic") {
  LstmLayer layer(1, 1);
  // Gate order along rows: input, forget, cell, output.
  layer.w()(0, 0) = 0.1;
  layer.w()(1, 0) = 0.2;
  layer.w()(2, 0) = 0.3;
  layer.w()(3, 0) = 0.4;
  layer.u()(0, 0) = 0.5;
  layer.u()(1, 0) = 0.6;
  layer.u()(2, 0) = 0.7;
  layer.u()(3, 0) = 0.8;
  layer.b() = {0.01, 0.02, 0.03, 0.04};

  Tensor3 x(1, 1, 1);
  x.at(0, 0, 0) = 0.7;
  const Tensor3 y = layer.forward(x);

  // Scalar re-derivation (initial hidden and cell state are zero).
  auto sigmoid = [](double z) { return 1.0 / (1.0 + std::exp(-z)); };
  const double gi = sigmoid(0.1 * 0.7 + 0.01);
  const double gf = sigmoid(0.2 * 0.7 + 0.02);
  const double gg = std::tanh(0.3 * 0.7 + 0.03);
  const double go = sigmoid(0.4 * 0.7 + 0.04);
  const double c = gf * 0.0 + gi * gg;
  const double h = go * std::tanh(c);
  CHECK(y.at(0, 0, 0) == doctest::Approx(h).epsilon(1e-12));
  (void)gf;
}

TEST_CASE("batch entries do not mix") {
  LstmLayer layer(3, 5);
  Rng rng(9);
  layer.init(rng);
  const Tensor3 x = random_tensor(3, 6, 3, 2);
  const Tensor3 y = layer.forward(x);

  // Permute the batch; outputs permute identically.
  Tensor3 xp(3, 6, 3);
  const std::size_t perm[3] = {2, 0, 1};
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t t = 0; t < 6; ++t) {
      for (std::size_t f = 0; f < 3; ++f) xp.at(b, t, f) = x.at(perm[b], t, f);
    }
  }
  const Tensor3 yp = layer.forward(xp);
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t t = 0; t < 6; ++t) {
      for (std::size_t f = 0; f < 5; ++f) {
        CHECK(yp.at(b, t, f) == y.at(perm[b], t, f));
      }
    }
  }
}

TEST_CASE("LSTM BPTT gradients match central finite differences") {
  LstmLayer layer(4, 5);
  Rng rng(33);
  layer.init(rng);
  const Tensor3 x = random_tensor(3, 6, 4, 34);
  const Tensor3 target = random_tensor(3, 6, 5, 35);

  auto loss = [&]() {
    const Tensor3 y = layer.forward(x);
    return mse_loss(y, target).value;
  };
  auto backward = [&]() {
    layer.zero_grads();
    LstmCache cache;
    const Tensor3 y = layer.forward(x, &cache);
    layer.backward(cache, mse_loss(y, target).grad);
  };
  const GradCheckReport report = gradient_check(layer.params("lstm"), loss, backward);
  CAPTURE(report.worst_block);
  CHECK(report.max_rel_error < 1e-4);
}

TEST_CASE("LSTM input gradients match finite differences too") {
  LstmLayer layer(3, 4);
  Rng rng(55);
  layer.init(rng);
  Tensor3 x = random_tensor(2, 5, 3, 56);
  const Tensor3 target = random_tensor(2, 5, 4, 57);

  LstmCache cache;
  const Tensor3 y = layer.forward(x, &cache);
  layer.zero_grads();
  const Tensor3 dx = layer.backward(cache, mse_loss(y, target).grad);

  const double h = 1e-5;
  for (std::size_t i = 0; i < x.values.size(); i += 7) {
    const double keep = x.values[i];
    x.values[i] = keep + h;
    const double up = mse_loss(layer.forward(x), target).value;
    x.values[i] = keep - h;
    const double down = mse_loss(layer.forward(x), target).value;
    x.values[i] = keep;
    const double numeric = (up - down) / (2.0 * h);
    CHECK(dx.values[i] == doctest::Approx(numeric).epsilon(1e-4));
  }
}

TEST_CASE("backward is linear in the upstream gradient") {
  LstmLayer layer(2, 3);
  Rng rng(8);
  layer.init(rng);
  const Tensor3 x = random_tensor(2, 4, 2, 3);
  LstmCache cache;
  layer.forward(x, &cache);

  Tensor3 zero_grad(2, 4, 3);
  layer.zero_grads();
  const Tensor3 dx0 = layer.backward(cache, zero_grad);
  for (double v : dx0.values) CHECK(v == 0.0);
  for (const auto& p : layer.params("l")) {
    for (std::size_t i = 0; i < p.size; ++i) CHECK(p.grad[i] == 0.0);
  }

  const Tensor3 g = random_tensor(2, 4, 3, 4);
  Tensor3 g2 = g;
  for (auto& v : g2.values) v *= 2.0;

  layer.zero_grads();
  layer.backward(cache, g);
  std::vector<std::vector<double>> grads1;
  for (const auto& p : layer.params("l")) grads1.emplace_back(p.grad, p.grad + p.size);

  layer.zero_grads();
  layer.backward(cache, g2);
  const auto params = layer.params("l");
  for (std::size_t k = 0; k < params.size(); ++k) {
    for (std::size_t i = 0; i < params[k].size; ++i) {
      CHECK(params[k].grad[i] == doctest::Approx(2.0 * grads1[k][i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("dense layer: identity weights pass input through, sigmoid at zero is half") {
  DenseLayer identity(3, 3, Activation::kIdentity);
  for (std::size_t i = 0; i < 3; ++i) identity.w()(i, i) = 1.0;
  const Tensor3 x = random_tensor(2, 4, 3, 91);
  const Tensor3 y = identity.forward(x);
  for (std::size_t i = 0; i < x.values.size(); ++i) CHECK(y.values[i] == x.values[i]);

  DenseLayer sig(3, 2, Activation::kSigmoid);  // zero weights
  const Tensor3 s = sig.forward(x);
  for (double v : s.values) CHECK(v == 0.5);
}

TEST_CASE("dense gradients match finite differences (both activations)") {
  for (Activation act : {Activation::kIdentity, Activation::kSigmoid}) {
    DenseLayer layer(4, 3, act);
    Rng rng(61);
    layer.init(rng);
    const Tensor3 x = random_tensor(2, 5, 4, 62);
    const Tensor3 target = random_tensor(2, 5, 3, 63);
    auto loss = [&]() { return mse_loss(layer.forward(x), target).value; };
    auto backward = [&]() {
      layer.zero_grads();
      DenseCache cache;
      const Tensor3 y = layer.forward(x, &cache);
      layer.backward(cache, mse_loss(y, target).grad);
    };
    const auto report = gradient_check(layer.params("dense"), loss, backward);
    CHECK(report.max_rel_error < 1e-4);
  }
}

TEST_CASE("mse loss: exact zero, unit offset, naive-loop oracle") {
  const Tensor3 a = random_tensor(2, 3, 4, 70);
  CHECK(mse_loss(a, a).value == 0.0);
  for (double v : mse_loss(a, a).grad.values) CHECK(v == 0.0);

  Tensor3 b = a;
  for (auto& v : b.values) v += 1.0;
  CHECK(mse_loss(b, a).value == doctest::Approx(1.0).epsilon(1e-12));

  const Tensor3 c = random_tensor(2, 3, 4, 71);
  double naive = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    naive += (a.values[i] - c.values[i]) * (a.values[i] - c.values[i]);
  }
  naive /= static_cast<double>(a.values.size());
  CHECK(mse_loss(a, c).value == doctest::Approx(naive).epsilon(1e-12));

  Tensor3 wrong(2, 3, 5);
  CHECK_THROWS_AS(mse_loss(a, wrong), std::invalid_argument);
}

TEST_CASE("batch loss equals the mean of per-example losses") {
  const Tensor3 batch = random_tensor(6, 4, 3, 80);
  const Tensor3 target = random_tensor(6, 4, 3, 81);
  const double whole = mse_loss(batch, target).value;
  double acc = 0.0;
  for (std::size_t b = 0; b < 6; ++b) {
    Tensor3 xb(1, 4, 3), tb(1, 4, 3);
    for (std::size_t t = 0; t < 4; ++t) {
      for (std::size_t f = 0; f < 3; ++f) {
        xb.at(0, t, f) = batch.at(b, t, f);
        tb.at(0, t, f) = target.at(b, t, f);
      }
    }
    acc += mse_loss(xb, tb).value / 6.0;
  }
  CHECK(whole == doctest::Approx(acc).epsilon(1e-9));
}

TEST_CASE("masked mse ignores padding") {
  Tensor3 pred(2, 4, 2, 0.0);
  Tensor3 target(2, 4, 2, 0.0);
  pred.at(0, 3, 0) = 100.0;  // padding region of sequence 0
  const auto r = mse_loss_masked(pred, target, {3, 4});
  CHECK(r.value == 0.0);
  CHECK(r.grad.at(0, 3, 0) == 0.0);
}

TEST_CASE("adam first step moves by about lr regardless of gradient size") {
  std::vector<double> param{1.0};
  std::vector<double> grad{37.5};
  std::vector<ParamView> views{{"w", param.data(), grad.data(), 1}};
  AdamState adam(views, {.learning_rate = 0.1});
  adam.step(views);
  CHECK(param[0] == doctest::Approx(1.0 - 0.1).epsilon(1e-7));

  param[0] = -2.0;
  grad[0] = -1e-3;
  AdamState adam2(views, {.learning_rate = 0.1});
  adam2.step(views);
  CHECK(param[0] == doctest::Approx(-2.0 + 0.1).epsilon(1e-4));
}

TEST_CASE("zero gradients leave parameters untouched") {
  std::vector<double> param{0.5, -0.25};
  std::vector<double> grad{0.0, 0.0};
  std::vector<ParamView> views{{"w", param.data(), grad.data(), 2}};
  AdamState adam(views, {});
  for (int i = 0; i < 10; ++i) adam.step(views);
  CHECK(param[0] == 0.5);
  CHECK(param[1] == -0.25);
}

TEST_CASE("200 adam steps on w^2 reach the minimum; oracle recurrence agrees") {
  std::vector<double> param{1.0};
  std::vector<double> grad{0.0};
  std::vector<ParamView> views{{"w", param.data(), grad.data(), 1}};
  AdamState adam(views, {.learning_rate = 0.1});

  // Independent scalar recurrence.
  double w = 1.0, m = 0.0, v = 0.0;
  const double b1 = 0.9, b2 = 0.999, eps = 1e-8, lr = 0.1;
  for (int t = 1; t <= 200; ++t) {
    grad[0] = 2.0 * param[0];
    adam.step(views);

    const double g = 2.0 * w;
    m = b1 * m + (1 - b1) * g;
    v = b2 * v + (1 - b2) * g * g;
    const double mh = m / (1.0 - std::pow(b1, t));
    const double vh = v / (1.0 - std::pow(b2, t));
    w -= lr * mh / (std::sqrt(vh) + eps);
    CHECK(param[0] == doctest::Approx(w).epsilon(1e-12));
  }
  CHECK(std::abs(param[0]) < 0.05);
}

TEST_CASE("non-finite gradients abort naming the block") {
  std::vector<double> param{1.0};
  std::vector<double> grad{std::nan("")};
  std::vector<ParamView> views{{"encoder.w", param.data(), grad.data(), 1}};
  AdamState adam(views, {});
  try {
    adam.step(views);
    FAIL("expected adam.step to throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("encoder.w") != std::string::npos);
  }
}

TEST_CASE("gradient_check flags a corrupted backward pass") {
  DenseLayer layer(3, 2, Activation::kIdentity);
  Rng rng(12);
  layer.init(rng);
  const Tensor3 x = random_tensor(2, 3, 3, 13);
  const Tensor3 target = random_tensor(2, 3, 2, 14);
  auto loss = [&]() { return mse_loss(layer.forward(x), target).value; };
  auto corrupted_backward = [&]() {
    layer.zero_grads();
    DenseCache cache;
    const Tensor3 y = layer.forward(x, &cache);
    layer.backward(cache, mse_loss(y, target).grad);
    // Test fixture: flip the sign of every analytic gradient.
    for (auto& p : layer.params("dense")) {
      for (std::size_t i = 0; i < p.size; ++i) p.grad[i] = -p.grad[i];
    }
  };
  const auto report = gradient_check(layer.params("dense"), loss, corrupted_backward);
  CHECK(report.max_rel_error > 1e-1);
}

TEST_CASE("seeded initialization is bit-reproducible") {
  LstmLayer a(7, 11), b(7, 11);
  Rng ra(1234), rb(1234);
  a.init(ra);
  b.init(rb);
  for (std::size_t i = 0; i < a.w().size(); ++i) CHECK(a.w().data()[i] == b.w().data()[i]);
  for (std::size_t i = 0; i < a.u().size(); ++i) CHECK(a.u().data()[i] == b.u().data()[i]);
  for (std::size_t i = 0; i < a.b().size(); ++i) CHECK(a.b()[i] == b.b()[i]);
  // Forget-gate bias sits at +1.
  for (std::size_t i = 11; i < 22; ++i) CHECK(a.b()[i] == 1.0);
  CHECK(a.b()[0] == 0.0);
}

TEST_CASE("gather/scatter last step honor per-sequence lengths") {
  const Tensor3 x = random_tensor(3, 5, 2, 90);
  const std::vector<std::size_t> lengths{5, 2, 4};
  const Tensor3 last = gather_last_step(x, lengths);
  CHECK(last.at(0, 0, 1) == x.at(0, 4, 1));
  CHECK(last.at(1, 0, 0) == x.at(1, 1, 0));
  CHECK(last.at(2, 0, 1) == x.at(2, 3, 1));

  const Tensor3 back = scatter_last_step(last, 5, lengths);
  CHECK(back.at(1, 1, 0) == last.at(1, 0, 0));
  CHECK(back.at(1, 4, 0) == 0.0);
  CHECK_THROWS_AS(gather_last_step(x, {6, 1, 1}), std::invalid_argument);
}

}  // TEST_SUITE
