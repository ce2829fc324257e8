// core/src/models/gan.cc

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

#include "neurovox/models/gan.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace neurovox::models {
namespace {

constexpr double kProbClamp = 1e-12;

double clamp_prob(double p, const char* name) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument(std::string("gan_losses: ") + name +
                                " outside [0,1] after clamping");
  }
  return std::clamp(p, kProbClamp, 1.0 - kProbClamp);
}

void check_streams(const neural::Tensor3& mfcc, const neural::Tensor3& eeg) {
  if (mfcc.batch != eeg.batch || mfcc.time != eeg.time) {
    throw std::invalid_argument("gan: mfcc/eeg streams must share (batch, time)");
  }
}

neural::Tensor3 concat_features(const neural::Tensor3& a, const neural::Tensor3& b) {
  neural::Tensor3 out(a.batch, a.time, a.features + b.features);
  for (std::size_t i = 0; i < a.batch; ++i) {
    for (std::size_t t = 0; t < a.time; ++t) {
      const auto fa = a.frame(i, t);
      const auto fb = b.frame(i, t);
      const auto fo = out.frame(i, t);
      std::copy(fa.begin(), fa.end(), fo.begin());
      std::copy(fb.begin(), fb.end(), fo.begin() + static_cast<std::ptrdiff_t>(a.features));
    }
  }
  return out;
}

std::pair<neural::Tensor3, neural::Tensor3> split_features(const neural::Tensor3& x,
                                                           std::size_t width_a) {
  neural::Tensor3 a(x.batch, x.time, width_a);
  neural::Tensor3 b(x.batch, x.time, x.features - width_a);
  for (std::size_t i = 0; i < x.batch; ++i) {
    for (std::size_t t = 0; t < x.time; ++t) {
      const auto fx = x.frame(i, t);
      const auto fa = a.frame(i, t);
      const auto fb = b.frame(i, t);
      std::copy(fx.begin(), fx.begin() + static_cast<std::ptrdiff_t>(width_a), fa.begin());
      std::copy(fx.begin() + static_cast<std::ptrdiff_t>(width_a), fx.end(), fb.begin());
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<double, double> gan_losses(double p_fake, double p_clean, double p_noisy) {
  const double pf = clamp_prob(p_fake, "p_fake");
  const double pc = clamp_prob(p_clean, "p_clean");
  const double pn = clamp_prob(p_noisy, "p_noisy");
  const double loss_g = -std::log(pf);
  const double loss_d = -std::log(1.0 - pf) - std::log(1.0 - pn) - std::log(pc);
  return {loss_g, loss_d};
}

Generator::Generator(std::size_t mfcc_dim, std::size_t eeg_dim, std::size_t hidden_dim,
                     std::size_t output_dim)
    : mfcc_lstm_(mfcc_dim, hidden_dim),
      eeg_lstm_(eeg_dim, hidden_dim),
      merge_lstm_(2 * hidden_dim, hidden_dim),
      dense_(hidden_dim, output_dim == 0 ? mfcc_dim : output_dim,
             neural::Activation::kIdentity) {}

void Generator::init(std::uint64_t seed) {
  Rng rng(seed);
  mfcc_lstm_.init(rng);
  eeg_lstm_.init(rng);
  merge_lstm_.init(rng);
  dense_.init(rng);
}

neural::Tensor3 Generator::forward(const neural::Tensor3& mfcc, const neural::Tensor3& eeg,
                                   Cache* cache) const {
  check_streams(mfcc, eeg);
  Cache local;
  Cache& c = cache != nullptr ? *cache : local;
  const neural::Tensor3 hm = mfcc_lstm_.forward(mfcc, &c.mfcc);
  const neural::Tensor3 he = eeg_lstm_.forward(eeg, &c.eeg);
  const neural::Tensor3 merged = concat_features(hm, he);
  const neural::Tensor3 hz = merge_lstm_.forward(merged, &c.merge);
  return dense_.forward(hz, &c.out);
}

std::pair<neural::Tensor3, neural::Tensor3> Generator::backward(
    const Cache& cache, const neural::Tensor3& grad_out) {
  const neural::Tensor3 d_hz = dense_.backward(cache.out, grad_out);
  const neural::Tensor3 d_merged = merge_lstm_.backward(cache.merge, d_hz);
  auto [d_hm, d_he] = split_features(d_merged, mfcc_lstm_.hidden_dim());
  neural::Tensor3 d_mfcc = mfcc_lstm_.backward(cache.mfcc, d_hm);
  neural::Tensor3 d_eeg = eeg_lstm_.backward(cache.eeg, d_he);
  return {std::move(d_mfcc), std::move(d_eeg)};
}

void Generator::zero_grads() {
  mfcc_lstm_.zero_grads();
  eeg_lstm_.zero_grads();
  merge_lstm_.zero_grads();
  dense_.zero_grads();
}

std::vector<neural::ParamView> Generator::params() {
  std::vector<neural::ParamView> out;
  for (auto& p : mfcc_lstm_.params("gen.mfcc_lstm")) out.push_back(p);
  for (auto& p : eeg_lstm_.params("gen.eeg_lstm")) out.push_back(p);
  for (auto& p : merge_lstm_.params("gen.merge_lstm")) out.push_back(p);
  for (auto& p : dense_.params("gen.dense")) out.push_back(p);
  return out;
}

Discriminator::Discriminator(std::size_t mfcc_dim, std::size_t eeg_dim, std::size_t hidden_dim)
    : mfcc_lstm_(mfcc_dim, hidden_dim),
      eeg_lstm_(eeg_dim, hidden_dim),
      merge_lstm_(2 * hidden_dim, hidden_dim),
      dense_(hidden_dim, 1, neural::Activation::kSigmoid) {}

void Discriminator::init(std::uint64_t seed) {
  Rng rng(seed);
  mfcc_lstm_.init(rng);
  eeg_lstm_.init(rng);
  merge_lstm_.init(rng);
  dense_.init(rng);
}

std::vector<double> Discriminator::forward(const neural::Tensor3& mfcc,
                                           const neural::Tensor3& eeg,
                                           const std::vector<std::size_t>& lengths,
                                           Cache* cache) const {
  check_streams(mfcc, eeg);
  Cache local;
  Cache& c = cache != nullptr ? *cache : local;
  c.lengths = lengths;
  c.time = mfcc.time;
  const neural::Tensor3 hm = mfcc_lstm_.forward(mfcc, &c.mfcc);
  const neural::Tensor3 he = eeg_lstm_.forward(eeg, &c.eeg);
  const neural::Tensor3 merged = concat_features(hm, he);
  const neural::Tensor3 hz = merge_lstm_.forward(merged, &c.merge);
  const neural::Tensor3 last = neural::gather_last_step(hz, lengths);
  const neural::Tensor3 probs = dense_.forward(last, &c.out);
  std::vector<double> out(probs.batch);
  for (std::size_t b = 0; b < probs.batch; ++b) out[b] = probs.at(b, 0, 0);
  return out;
}

std::pair<neural::Tensor3, neural::Tensor3> Discriminator::backward(
    const Cache& cache, const std::vector<double>& grad_probs) {
  if (grad_probs.size() != cache.lengths.size()) {
    throw std::invalid_argument("Discriminator::backward: grad/batch mismatch");
  }
  neural::Tensor3 d_prob(grad_probs.size(), 1, 1);
  for (std::size_t b = 0; b < grad_probs.size(); ++b) d_prob.at(b, 0, 0) = grad_probs[b];
  const neural::Tensor3 d_last = dense_.backward(cache.out, d_prob);
  const neural::Tensor3 d_hz = neural::scatter_last_step(d_last, cache.time, cache.lengths);
  const neural::Tensor3 d_merged = merge_lstm_.backward(cache.merge, d_hz);
  auto [d_hm, d_he] = split_features(d_merged, mfcc_lstm_.hidden_dim());
  neural::Tensor3 d_mfcc = mfcc_lstm_.backward(cache.mfcc, d_hm);
  neural::Tensor3 d_eeg = eeg_lstm_.backward(cache.eeg, d_he);
  return {std::move(d_mfcc), std::move(d_eeg)};
}

void Discriminator::zero_grads() {
  mfcc_lstm_.zero_grads();
  eeg_lstm_.zero_grads();
  merge_lstm_.zero_grads();
  dense_.zero_grads();
}

std::vector<neural::ParamView> Discriminator::params() {
  std::vector<neural::ParamView> out;
  for (auto& p : mfcc_lstm_.params("disc.mfcc_lstm")) out.push_back(p);
  for (auto& p : eeg_lstm_.params("disc.eeg_lstm")) out.push_back(p);
  for (auto& p : merge_lstm_.params("disc.merge_lstm")) out.push_back(p);
  for (auto& p : dense_.params("disc.dense")) out.push_back(p);
  return out;
}

}  // namespace neurovox::models
