// tests/unit/models_test.cc

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
#include <filesystem>
#include <vector>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"
#include "neurovox/io/checkpoint.h"
#include "neurovox/io/model_io.h"
#include "neurovox/models/gan.h"
#include "neurovox/models/lstm_regression.h"
#include "neurovox/models/train.h"
#include "neurovox/neural/gradcheck.h"
#include "neurovox/neural/loss.h"

namespace {

using neurovox::Matrix;
using neurovox::Rng;
using namespace neurovox::models;
using neurovox::neural::Tensor3;

Matrix random_features(std::size_t frames, std::size_t width, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(frames, width);
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.gaussian();
  return m;
}

Tensor3 random_tensor(std::size_t b, std::size_t t, std::size_t f, std::uint64_t seed) {
  Rng rng(seed);
  Tensor3 x(b, t, f);
  for (auto& v : x.values) v = rng.gaussian();
  return x;
}

// Tiny synthetic training set: clean cepstra are a fixed smooth pattern, the
// neural stream carries a noisy copy of them, the "noisy" cepstra add strong
// noise. Learnable by construction.
TrainingSet tiny_training_set(std::size_t utterances, std::size_t frames,
                              std::size_t mfcc_dim, std::size_t eeg_dim, double noise,
                              std::uint64_t seed) {
  Rng rng(seed);
  TrainingSet set;
  set.mfcc_dim = mfcc_dim;
  set.eeg_dim = eeg_dim;
  for (std::size_t u = 0; u < utterances; ++u) {
    TrainingTriple t;
    t.clean_mfcc = Matrix(frames, mfcc_dim);
    t.noisy_mfcc = Matrix(frames, mfcc_dim);
    t.eeg = Matrix(frames, eeg_dim);
    for (std::size_t f = 0; f < frames; ++f) {
      for (std::size_t k = 0; k < mfcc_dim; ++k) {
        const double v = std::sin(0.1 * static_cast<double>(f) + static_cast<double>(k + u));
        t.clean_mfcc(f, k) = v;
        t.noisy_mfcc(f, k) = v + noise * rng.gaussian();
      }
      for (std::size_t k = 0; k < eeg_dim; ++k) {
        t.eeg(f, k) = t.clean_mfcc(f, k % mfcc_dim) + 0.1 * rng.gaussian();
      }
    }
    set.items.push_back(std::move(t));
  }
  return set;
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("adversarial losses at one half are ln 2 and 3 ln 2") {
  const auto [lg, ld] = gan_losses(0.5, 0.5, 0.5);
  CHECK(lg == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(ld == doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("loss limits: a perfect generator zeroes its loss, clamping keeps logs finite") {
  const auto [lg, ld] = gan_losses(1.0, 0.5, 0.5);
  CHECK(lg == doctest::Approx(0.0).epsilon(1e-11));
  // The clamp bounds the blowup near -log(1e-12) + 2 ln 2 (about 29).
  CHECK(std::isfinite(ld));
  CHECK(ld > 25.0);
  CHECK(ld < 32.0);

  CHECK_THROWS_AS(gan_losses(1.5, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gan_losses(0.5, -0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gan_losses(0.5, 0.5, std::nan("")), std::invalid_argument);
}

TEST_CASE("losses agree with the direct formulas on random triples") {
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    const double pf = rng.uniform(1e-6, 1.0 - 1e-6);
    const double pc = rng.uniform(1e-6, 1.0 - 1e-6);
    const double pn = rng.uniform(1e-6, 1.0 - 1e-6);
    const auto [lg, ld] = gan_losses(pf, pc, pn);
    CHECK(lg == doctest::Approx(-std::log(pf)).epsilon(1e-15));
    CHECK(ld ==
          doctest::Approx(-std::log(1 - pf) - std::log(1 - pn) - std::log(pc)).epsilon(1e-15));
  }
}

TEST_CASE("generator and discriminator shapes and output range") {
  Generator gen(13, 30, 16);
  gen.init(5);
  const Tensor3 mfcc = random_tensor(2, 7, 13, 1);
  const Tensor3 eeg = random_tensor(2, 7, 30, 2);
  const Tensor3 fake = gen.forward(mfcc, eeg);
  CHECK(fake.batch == 2);
  CHECK(fake.time == 7);
  CHECK(fake.features == 13);

  Discriminator disc(13, 30, 16);
  disc.init(6);
  const auto probs = disc.forward(mfcc, eeg, {7, 4});
  REQUIRE(probs.size() == 2);
  for (double p : probs) {
    CHECK(p > 0.0);
    CHECK(p < 1.0);
  }

  // Saturating inputs still give strictly interior probabilities.
  Tensor3 huge = mfcc;
  for (auto& v : huge.values) v = 1e6;
  for (double p : disc.forward(huge, eeg, {7, 7})) {
    CHECK(p > 0.0);
    CHECK(p < 1.0);
  }

  Tensor3 mismatched = random_tensor(2, 6, 30, 3);
  CHECK_THROWS_AS(gen.forward(mfcc, mismatched), std::invalid_argument);
}

TEST_CASE("full regression stack passes the gradient check") {
  LstmRegressionModel model(3, 2, 4);
  model.init(11);
  const Tensor3 x = random_tensor(2, 5, 5, 12);
  const Tensor3 target = random_tensor(2, 5, 3, 13);

  auto loss = [&]() {
    return neurovox::neural::mse_loss(model.forward(x), target).value;
  };
  auto backward = [&]() {
    model.zero_grads();
    LstmRegressionModel::Cache cache;
    const Tensor3 y = model.forward(x, &cache);
    model.backward(cache, neurovox::neural::mse_loss(y, target).grad);
  };
  const auto report = neurovox::neural::gradient_check(model.params(), loss, backward);
  CAPTURE(report.worst_block);
  CHECK(report.max_rel_error < 1e-4);
}

TEST_CASE("generator gradient flows through the frozen discriminator") {
  Generator gen(3, 2, 4);
  Discriminator disc(3, 2, 4);
  gen.init(21);
  disc.init(22);
  const Tensor3 mfcc = random_tensor(2, 5, 3, 23);
  const Tensor3 eeg = random_tensor(2, 5, 2, 24);
  const std::vector<std::size_t> lengths{5, 3};

  auto loss = [&]() {
    const Tensor3 fake = gen.forward(mfcc, eeg);
    const auto probs = disc.forward(fake, eeg, lengths);
    double acc = 0.0;
    for (double p : probs) acc += -std::log(p) / static_cast<double>(probs.size());
    return acc;
  };
  auto backward = [&]() {
    gen.zero_grads();
    Generator::Cache gc;
    const Tensor3 fake = gen.forward(mfcc, eeg, &gc);
    Discriminator::Cache dc;
    const auto probs = disc.forward(fake, eeg, lengths, &dc);
    std::vector<double> grad(probs.size());
    for (std::size_t b = 0; b < probs.size(); ++b) {
      grad[b] = -1.0 / (static_cast<double>(probs.size()) * probs[b]);
    }
    disc.zero_grads();
    auto [d_fake, d_eeg] = disc.backward(dc, grad);
    (void)d_eeg;
    gen.backward(gc, d_fake);
  };
  const auto report = neurovox::neural::gradient_check(gen.params(), loss, backward);
  CAPTURE(report.worst_block);
  CHECK(report.max_rel_error < 1e-4);
}

TEST_CASE("enhance keeps shape, is deterministic, validates widths") {
  LstmRegressionModel model(13, 30, 8);
  model.init(31);
  const Matrix mfcc = random_features(120, 13, 41);
  const Matrix eeg = random_features(120, 30, 42);
  const Matrix out1 = enhance(model, mfcc, eeg);
  const Matrix out2 = enhance(model, mfcc, eeg);
  REQUIRE(out1.rows() == 120);
  REQUIRE(out1.cols() == 13);
  for (std::size_t i = 0; i < out1.size(); ++i) CHECK(out1.data()[i] == out2.data()[i]);

  const Matrix short_eeg = random_features(100, 30, 43);
  CHECK_THROWS_AS(enhance(model, mfcc, short_eeg), std::invalid_argument);
  const Matrix wrong_width = random_features(120, 29, 44);
  CHECK_THROWS_AS(enhance(model, mfcc, wrong_width), std::invalid_argument);
}

TEST_CASE("a zero-noise corpus trains to near-zero loss") {
  TrainingSet set = tiny_training_set(2, 60, 4, 3, 0.0, 77);
  LstmRegressionModel model(4, 3, 24);
  model.init(78);
  TrainConfig config;
  config.epochs = 320;
  config.batch_size = 2;
  config.learning_rate = 5e-3;
  config.sequence_length = 60;
  config.seed = 79;
  neurovox::neural::AdamState adam(model.params(), {.learning_rate = config.learning_rate});
  const auto history = train_lstm_regression(model, adam, set, config);
  REQUIRE(history.size() == 320);
  CHECK(history.back().mean_loss <= 1e-3);
  // Loss sequence is finite throughout.
  for (const auto& e : history) CHECK(std::isfinite(e.mean_loss));
}

TEST_CASE("gan smoke run: finite logs and a discriminator that learns something") {
  TrainingSet set = tiny_training_set(8, 50, 4, 3, 1.0, 91);
  Generator gen(4, 3, 10);
  Discriminator disc(4, 3, 10);
  gen.init(92);
  disc.init(93);
  TrainConfig config;
  config.epochs = 5;
  config.batch_size = 1;
  config.learning_rate = 1e-2;
  config.sequence_length = 50;
  config.seed = 94;
  neurovox::neural::AdamState adam_g(gen.params(), {.learning_rate = config.learning_rate});
  neurovox::neural::AdamState adam_d(disc.params(), {.learning_rate = config.learning_rate});
  const auto history = train_gan(gen, disc, adam_g, adam_d, set, config);
  REQUIRE(history.size() == 5);
  for (const auto& e : history) {
    CHECK(std::isfinite(e.mean_loss_g));
    CHECK(std::isfinite(e.mean_loss_d));
    CHECK(std::isfinite(e.mean_p_fake));
  }

  // Accuracy on clean-vs-fake strictly above chance: the fraction of
  // (clean, fake) pairs the trained discriminator ranks correctly.
  const std::size_t n = set.items.size();
  neurovox::neural::Tensor3 clean(n, 50, 4), noisy(n, 50, 4), eeg(n, 50, 3);
  std::vector<std::size_t> lengths(n, 50);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t t = 0; t < 50; ++t) {
      for (std::size_t k = 0; k < 4; ++k) {
        clean.at(u, t, k) = set.items[u].clean_mfcc(t, k);
        noisy.at(u, t, k) = set.items[u].noisy_mfcc(t, k);
      }
      for (std::size_t k = 0; k < 3; ++k) eeg.at(u, t, k) = set.items[u].eeg(t, k);
    }
  }
  const neurovox::neural::Tensor3 fake = gen.forward(noisy, eeg);
  const auto p_clean = disc.forward(clean, eeg, lengths);
  const auto p_fake = disc.forward(fake, eeg, lengths);
  double correct = 0.0;
  for (double pc : p_clean) {
    for (double pf : p_fake) correct += pc > pf ? 1.0 : 0.0;
  }
  const double accuracy = correct / static_cast<double>(n * n);
  CAPTURE(accuracy);
  CHECK(accuracy > 0.5);
}

TEST_CASE("discriminator alone separates fixed fake from clean data") {
  // Separable by construction: clean cepstra near +1, fake near -1.
  const std::size_t frames = 30, mfcc_dim = 3, eeg_dim = 2, batch = 4;
  Rng rng(101);
  auto make = [&](double center) {
    Tensor3 x(batch, frames, mfcc_dim);
    for (auto& v : x.values) v = center + 0.05 * rng.gaussian();
    return x;
  };
  const Tensor3 clean = make(1.0);
  const Tensor3 fake = make(-1.0);
  const Tensor3 noisy = make(-1.0);
  const Tensor3 eeg = random_tensor(batch, frames, eeg_dim, 102);
  const std::vector<std::size_t> lengths(batch, frames);

  Discriminator disc(mfcc_dim, eeg_dim, 8);
  disc.init(103);
  neurovox::neural::AdamState adam(disc.params(), {.learning_rate = 5e-3});

  double prev_pc = 0.0, prev_pf = 1.0;
  bool monotone = true;
  for (int epoch = 0; epoch < 8; ++epoch) {
    disc.zero_grads();
    Discriminator::Cache cf, cc, cn;
    const auto pf = disc.forward(fake, eeg, lengths, &cf);
    const auto pc = disc.forward(clean, eeg, lengths, &cc);
    const auto pn = disc.forward(noisy, eeg, lengths, &cn);
    std::vector<double> gf(batch), gc(batch), gn(batch);
    double pf_mean = 0.0, pc_mean = 0.0;
    for (std::size_t b = 0; b < batch; ++b) {
      gf[b] = 1.0 / (batch * (1.0 - pf[b]));
      gn[b] = 1.0 / (batch * (1.0 - pn[b]));
      gc[b] = -1.0 / (batch * pc[b]);
      pf_mean += pf[b] / batch;
      pc_mean += pc[b] / batch;
    }
    disc.backward(cf, gf);
    disc.backward(cc, gc);
    disc.backward(cn, gn);
    adam.step(disc.params());

    if (epoch > 0 && (pc_mean < prev_pc - 1e-9 || pf_mean > prev_pf + 1e-9)) monotone = false;
    prev_pc = pc_mean;
    prev_pf = pf_mean;
  }
  CHECK(monotone);
  CHECK(prev_pc > 0.5);
  CHECK(prev_pf < 0.5);
}

TEST_CASE("non-finite parameters abort training with diagnostics") {
  TrainingSet set = tiny_training_set(1, 20, 3, 2, 0.1, 111);
  LstmRegressionModel model(3, 2, 4);
  model.init(112);
  model.params()[0].value[0] = std::nan("");
  TrainConfig config;
  config.epochs = 1;
  config.sequence_length = 20;
  neurovox::neural::AdamState adam(model.params(), {});
  CHECK_THROWS_AS(train_lstm_regression(model, adam, set, config), std::runtime_error);
}

TEST_CASE("training configuration is validated") {
  TrainConfig bad;
  bad.epochs = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = TrainConfig{};
  bad.sequence_length = 1;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = TrainConfig{};
  bad.batch_size = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  TrainingSet set = tiny_training_set(2, 10, 3, 2, 0.1, 1);
  set.items[1].eeg = Matrix(10, 5);
  CHECK_THROWS_AS(validate(set), std::invalid_argument);
}

TEST_CASE("checkpoint round trip reproduces enhance bit for bit") {
  namespace fs = std::filesystem;
  const std::string dir = (fs::temp_directory_path() / "nv_models_test").string();
  fs::create_directories(dir);

  LstmRegressionModel model(5, 4, 6);
  model.init(55);
  neurovox::neural::AdamState adam(model.params(), {.learning_rate = 3e-3});
  const Matrix mfcc = random_features(40, 5, 56);
  const Matrix eeg = random_features(40, 4, 57);
  const Matrix before = enhance(model, mfcc, eeg);

  const std::string path = dir + "/lstm_roundtrip.nvck";
  neurovox::io::save_checkpoint(
      path, neurovox::io::checkpoint_from_lstm(model, &adam, 55, 9, 0xabcd));
  const auto cp = neurovox::io::load_checkpoint(path);
  CHECK(cp.epoch == 9);
  CHECK(cp.config_hash == 0xabcd);
  neurovox::neural::AdamState adam2;
  const auto restored = neurovox::io::lstm_from_checkpoint(cp, &adam2, {.learning_rate = 3e-3});
  const Matrix after = enhance(*restored, mfcc, eeg);
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(before.data()[i] == after.data()[i]);
  CHECK(adam2.step_count() == adam.step_count());

  Generator gen(5, 4, 6);
  gen.init(60);
  const Matrix gen_before = enhance(gen, mfcc, eeg);
  const std::string gpath = dir + "/gen_roundtrip.nvck";
  neurovox::io::save_checkpoint(
      gpath, neurovox::io::checkpoint_from_generator(gen, nullptr, 60, 3, 0x1));
  const auto gen_restored =
      neurovox::io::generator_from_checkpoint(neurovox::io::load_checkpoint(gpath));
  const Matrix gen_after = enhance(*gen_restored, mfcc, eeg);
  for (std::size_t i = 0; i < gen_before.size(); ++i) {
    CHECK(gen_before.data()[i] == gen_after.data()[i]);
  }
}

}  // TEST_SUITE
