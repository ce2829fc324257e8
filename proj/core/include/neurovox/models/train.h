// core/include/neurovox/models/train.h

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

#ifndef NEUROVOX_MODELS_TRAIN_H_
#define NEUROVOX_MODELS_TRAIN_H_

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "neurovox/common/matrix.h"
#include "neurovox/models/gan.h"
#include "neurovox/models/lstm_regression.h"
#include "neurovox/neural/adam.h"

namespace neurovox::models {

struct TrainConfig {
  int epochs = 1;
  int batch_size = 1;
  double learning_rate = 1e-3;
  // Discriminator rate; 0 means "same as learning_rate". Keeping the critic
  // slower than the generator is the usual balance lever at small scale.
  double learning_rate_d = 0.0;
  int sequence_length = 200;  // frames per training segment (2 s at 100 Hz)
  std::uint64_t seed = 0;
  std::string loss_log_path;  // empty: no CSV written
  double grad_clip = 0.0;     // global-norm clip; 0 disables
};

void validate(const TrainConfig& config);

// One utterance worth of aligned 100 Hz features.
struct TrainingTriple {
  Matrix noisy_mfcc;  // frames x mfcc_dim
  Matrix eeg;         // frames x eeg_dim
  Matrix clean_mfcc;  // frames x mfcc_dim
};

struct TrainingSet {
  std::vector<TrainingTriple> items;
  std::size_t mfcc_dim = 13;
  std::size_t eeg_dim = 30;
};

void validate(const TrainingSet& set);

// Per-column affine standardization of the feature streams. Models train on
// z-scored cepstra/neural features (the raw c0 offset of ~-40 is far outside
// a fresh network's output range); enhance undoes the target scaling.
struct FeatureScaler {
  std::vector<double> mfcc_mean, mfcc_std;  // clean-cepstra statistics
  std::vector<double> eeg_mean, eeg_std;

  static FeatureScaler fit(const TrainingSet& data);

  void apply(TrainingSet& data) const;  // standardizes all three streams
  Matrix standardize_mfcc(const Matrix& m) const;
  Matrix standardize_eeg(const Matrix& m) const;
  Matrix restore_mfcc(const Matrix& m) const;  // inverse of standardize_mfcc
};

struct LstmEpochStats {
  int epoch = 0;
  double mean_loss = 0.0;
};

struct GanEpochStats {
  int epoch = 0;
  double mean_loss_g = 0.0;
  double mean_loss_d = 0.0;
  double mean_p_fake = 0.0;
  double mean_p_clean = 0.0;
  double mean_p_noisy = 0.0;
};

// Invoked after each completed epoch; the pipeline uses it to persist the
// rolling checkpoint that resume starts from.
using EpochCallback = std::function<void(int epoch_done)>;

// Minimizes MSE(prediction, clean) over (noisy ++ eeg) inputs. Utterances are
// cut into sequence_length segments; tail segments are zero padded and masked
// out of the loss. Epoch-level shuffling is derived from (seed, epoch), so a
// run resumed at start_epoch reproduces the uninterrupted loss sequence.
// Throws if the loss goes non-finite, naming epoch and batch.
std::vector<LstmEpochStats> train_lstm_regression(LstmRegressionModel& model,
                                                  neural::AdamState& adam,
                                                  const TrainingSet& data,
                                                  const TrainConfig& config,
                                                  int start_epoch = 0,
                                                  const EpochCallback& on_epoch = {});

// Adversarial loop. Per batch: one discriminator update over the three input
// pairs (fake, clean, noisy cepstra, each against the clean EEG stream), then
// one generator update through the frozen discriminator. A saturated
// discriminator (mean P_fake < 1e-6 for 50 consecutive batches) logs a
// warning and training continues.
std::vector<GanEpochStats> train_gan(Generator& generator, Discriminator& discriminator,
                                     neural::AdamState& adam_g, neural::AdamState& adam_d,
                                     const TrainingSet& data, const TrainConfig& config,
                                     int start_epoch = 0, const EpochCallback& on_epoch = {});

// Deterministic inference: full-length sequence, no segmentation.
// Inputs are frames x mfcc_dim and frames x eeg_dim with equal frame counts;
// output is frames x 13.
Matrix enhance(const LstmRegressionModel& model, const Matrix& mfcc, const Matrix& eeg);
Matrix enhance(const Generator& model, const Matrix& mfcc, const Matrix& eeg);

}  // namespace neurovox::models

#endif  // NEUROVOX_MODELS_TRAIN_H_
