// core/include/neurovox/pipeline/experiment.h

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

#ifndef NEUROVOX_PIPELINE_EXPERIMENT_H_
#define NEUROVOX_PIPELINE_EXPERIMENT_H_

#include <cstdint>
#include <string>

#include "neurovox/dimred/kpca.h"
#include "neurovox/models/train.h"

namespace neurovox::pipeline {

struct KpcaSettings {
  std::size_t k = 30;
  dimred::KpcaParams params;  // gamma/coef0/degree/cap/tolerance
};

// One experiment end to end: corpus, features, model choice, training
// schedule and output tree. Single master seed; every stage derives its
// stream from it.
struct ExperimentConfig {
  std::string manifest_path;
  std::string out_dir;
  std::string model = "lstm";  // "lstm" | "gan"
  KpcaSettings kpca;
  models::TrainConfig train;
  double mfcc_noise_sigma = 10.0;  // train-time cepstral corruption
  bool use_raw_eeg = false;        // feed 155-dim features instead of the reduced 30
  std::uint64_t master_seed = 0;
  std::string pesq_command;  // external evaluator template, empty = off
  int threads = 0;           // 0: NEUROVOX_THREADS env or 1
};

// Schedule presets: LSTM regression trains 1000 epochs at batch 100
// (lr 1e-3); the GAN trains 200 epochs (lr 1e-4, batch 32).
models::TrainConfig default_train_config(const std::string& model);

void validate(const ExperimentConfig& config);

// JSON round trip. Unknown keys are rejected; missing keys fall back to the
// defaults above (train defaults depend on the chosen model).
ExperimentConfig load_experiment_config(const std::string& path);
void save_experiment_config(const ExperimentConfig& config, const std::string& path);

// Canonical serialization of the semantically relevant fields (paths and
// thread counts excluded) and its FNV-1a hash. Checkpoints record the hash
// and refuse to load against a different configuration.
std::string canonical_config_json(const ExperimentConfig& config);
std::uint64_t config_hash(const ExperimentConfig& config);

}  // namespace neurovox::pipeline

#endif  // NEUROVOX_PIPELINE_EXPERIMENT_H_
