// core/include/neurovox/models/lstm_regression.h

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

#ifndef NEUROVOX_MODELS_LSTM_REGRESSION_H_
#define NEUROVOX_MODELS_LSTM_REGRESSION_H_

#include <cstdint>
#include <vector>

#include "neurovox/neural/dense.h"
#include "neurovox/neural/lstm.h"

namespace neurovox::models {

// Two stacked LSTMs (128 hidden units each) followed by a time-distributed
// identity dense layer producing 13 coefficients per frame. The input is the
// concatenation of noisy cepstra and reduced neural features.
class LstmRegressionModel {
 public:
  struct Cache {
    neural::LstmCache l1, l2;
    neural::DenseCache out;
  };

  // output_dim 0 means "match mfcc_dim" (the model predicts clean cepstra of
  // the same width it consumes).
  LstmRegressionModel(std::size_t mfcc_dim, std::size_t eeg_dim, std::size_t hidden_dim = 128,
                      std::size_t output_dim = 0);

  void init(std::uint64_t seed);

  std::size_t input_dim() const { return lstm1_.input_dim(); }
  std::size_t output_dim() const { return dense_.output_dim(); }
  std::size_t hidden_dim() const { return lstm1_.hidden_dim(); }
  std::size_t mfcc_dim() const { return mfcc_dim_; }
  std::size_t eeg_dim() const { return eeg_dim_; }

  neural::Tensor3 forward(const neural::Tensor3& input, Cache* cache = nullptr) const;

  // Accumulates parameter gradients; returns gradient w.r.t. the input.
  neural::Tensor3 backward(const Cache& cache, const neural::Tensor3& grad_out);

  void zero_grads();
  std::vector<neural::ParamView> params();

 private:
  std::size_t mfcc_dim_;
  std::size_t eeg_dim_;
  neural::LstmLayer lstm1_;
  neural::LstmLayer lstm2_;
  neural::DenseLayer dense_;
};

}  // namespace neurovox::models

#endif  // NEUROVOX_MODELS_LSTM_REGRESSION_H_
