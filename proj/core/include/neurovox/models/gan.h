// core/include/neurovox/models/gan.h

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

#ifndef NEUROVOX_MODELS_GAN_H_
#define NEUROVOX_MODELS_GAN_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "neurovox/neural/dense.h"
#include "neurovox/neural/lstm.h"

namespace neurovox::models {

// Adversarial losses over the discriminator's sigmoid outputs for the
// (fake, clean, noisy) input pairs:
//   L_G = -log(p_fake)
//   L_D = -log(1 - p_fake) - log(1 - p_noisy) + -log(p_clean)
// Inputs must lie in [0, 1]; they are clamped to [1e-12, 1 - 1e-12] so the
// logs stay finite at the extremes.
std::pair<double, double> gan_losses(double p_fake, double p_clean, double p_noisy);

// Generator: two parallel LSTMs over the cepstral and neural streams, their
// outputs concatenated into a third LSTM, then a time-distributed identity
// dense layer back to 13 coefficients.
class Generator {
 public:
  struct Cache {
    neural::LstmCache mfcc, eeg, merge;
    neural::DenseCache out;
  };

  // output_dim 0 means "match mfcc_dim".
  Generator(std::size_t mfcc_dim, std::size_t eeg_dim, std::size_t hidden_dim = 128,
            std::size_t output_dim = 0);

  void init(std::uint64_t seed);

  std::size_t mfcc_dim() const { return mfcc_lstm_.input_dim(); }
  std::size_t eeg_dim() const { return eeg_lstm_.input_dim(); }
  std::size_t hidden_dim() const { return mfcc_lstm_.hidden_dim(); }
  std::size_t output_dim() const { return dense_.output_dim(); }

  // Both streams must share (batch, time).
  neural::Tensor3 forward(const neural::Tensor3& mfcc, const neural::Tensor3& eeg,
                          Cache* cache = nullptr) const;

  // Returns (d_mfcc, d_eeg) input gradients.
  std::pair<neural::Tensor3, neural::Tensor3> backward(const Cache& cache,
                                                       const neural::Tensor3& grad_out);

  void zero_grads();
  std::vector<neural::ParamView> params();

 private:
  neural::LstmLayer mfcc_lstm_;
  neural::LstmLayer eeg_lstm_;
  neural::LstmLayer merge_lstm_;
  neural::DenseLayer dense_;
};

// Discriminator: same parallel topology, but the merge LSTM's last valid
// time-step output feeds a single-unit sigmoid dense layer, so the output is
// one probability per sequence, strictly inside (0, 1).
class Discriminator {
 public:
  struct Cache {
    neural::LstmCache mfcc, eeg, merge;
    neural::DenseCache out;
    std::vector<std::size_t> lengths;
    std::size_t time = 0;
  };

  Discriminator(std::size_t mfcc_dim, std::size_t eeg_dim, std::size_t hidden_dim = 128);

  void init(std::uint64_t seed);

  std::size_t mfcc_dim() const { return mfcc_lstm_.input_dim(); }
  std::size_t eeg_dim() const { return eeg_lstm_.input_dim(); }
  std::size_t hidden_dim() const { return mfcc_lstm_.hidden_dim(); }

  // lengths[b] in [1, time]: the last step actually fed to the dense head.
  std::vector<double> forward(const neural::Tensor3& mfcc, const neural::Tensor3& eeg,
                              const std::vector<std::size_t>& lengths,
                              Cache* cache = nullptr) const;

  // grad_probs is dLoss/dP per sequence. Returns (d_mfcc, d_eeg).
  std::pair<neural::Tensor3, neural::Tensor3> backward(const Cache& cache,
                                                       const std::vector<double>& grad_probs);

  void zero_grads();
  std::vector<neural::ParamView> params();

 private:
  neural::LstmLayer mfcc_lstm_;
  neural::LstmLayer eeg_lstm_;
  neural::LstmLayer merge_lstm_;
  neural::DenseLayer dense_;
};

}  // namespace neurovox::models

#endif  // NEUROVOX_MODELS_GAN_H_
