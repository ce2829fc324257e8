// core/src/models/lstm_regression.cc

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

#include "neurovox/models/lstm_regression.h"

namespace neurovox::models {

LstmRegressionModel::LstmRegressionModel(std::size_t mfcc_dim, std::size_t eeg_dim,
                                         std::size_t hidden_dim, std::size_t output_dim)
    : mfcc_dim_(mfcc_dim),
      eeg_dim_(eeg_dim),
      lstm1_(mfcc_dim + eeg_dim, hidden_dim),
      lstm2_(hidden_dim, hidden_dim),
      dense_(hidden_dim, output_dim == 0 ? mfcc_dim : output_dim,
             neural::Activation::kIdentity) {}

void LstmRegressionModel::init(std::uint64_t seed) {
  Rng rng(seed);
  lstm1_.init(rng);
  lstm2_.init(rng);
  dense_.init(rng);
}

neural::Tensor3 LstmRegressionModel::forward(const neural::Tensor3& input,
                                             Cache* cache) const {
  Cache local;
  Cache& c = cache != nullptr ? *cache : local;
  const neural::Tensor3 h1 = lstm1_.forward(input, &c.l1);
  const neural::Tensor3 h2 = lstm2_.forward(h1, &c.l2);
  return dense_.forward(h2, &c.out);
}

neural::Tensor3 LstmRegressionModel::backward(const Cache& cache,
                                              const neural::Tensor3& grad_out) {
  const neural::Tensor3 d2 = dense_.backward(cache.out, grad_out);
  const neural::Tensor3 d1 = lstm2_.backward(cache.l2, d2);
  return lstm1_.backward(cache.l1, d1);
}

void LstmRegressionModel::zero_grads() {
  lstm1_.zero_grads();
  lstm2_.zero_grads();
  dense_.zero_grads();
}

std::vector<neural::ParamView> LstmRegressionModel::params() {
  std::vector<neural::ParamView> out;
  for (auto& p : lstm1_.params("lstm1")) out.push_back(p);
  for (auto& p : lstm2_.params("lstm2")) out.push_back(p);
  for (auto& p : dense_.params("dense")) out.push_back(p);
  return out;
}

}  // namespace neurovox::models
