// core/include/neurovox/pipeline/commands.h

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

#ifndef NEUROVOX_PIPELINE_COMMANDS_H_
#define NEUROVOX_PIPELINE_COMMANDS_H_

#include <optional>
#include <string>
#include <vector>

#include "neurovox/metrics/report.h"
#include "neurovox/models/train.h"
#include "neurovox/pipeline/experiment.h"
#include "neurovox/synth/corpus.h"

namespace neurovox::pipeline {

// Programmatic command layer; the CLI subcommands are thin wrappers over
// these. All stages that iterate utterances honor the thread cap and order
// their outputs by utterance id, so results do not depend on the thread
// count.

struct SynthOptions {
  std::string preset = "desk";
  std::string out_dir;
  std::uint64_t seed = 7;
  // Optional preset overrides.
  std::optional<std::size_t> n_train_utterances;
  std::optional<std::size_t> n_test_utterances;
  std::optional<double> duration_s;
  std::optional<double> noise_level_db;
};

synth::CorpusManifest cmd_synth(const SynthOptions& options);

// Per-utterance cepstra (clean audio for train, the noisy mixture for test)
// and 155-dim neural features, truncated to the shorter frame count; fits
// kernel PCA on a seeded subsample of the train-split features, writes the
// explained-variance curve CSV and the reduced features for every split.
void cmd_extract(const ExperimentConfig& config);

struct TrainOutcome {
  std::string checkpoint_path;                  // final model
  std::string discriminator_checkpoint_path;    // gan only
  std::vector<models::LstmEpochStats> lstm_history;
  std::vector<models::GanEpochStats> gan_history;
};

// Trains the configured model with sigma-10 cepstral corruption materialized
// once per run from the master seed. Resumes from <model>.last.nvck when the
// config hash matches and epochs remain.
TrainOutcome cmd_train(const ExperimentConfig& config);

// Enhanced cepstra -> magnitude spectrogram -> phase reconstruction -> WAV,
// for every utterance of the split. Fails if the checkpoint's config hash
// does not match the active configuration.
std::vector<std::string> cmd_enhance(const ExperimentConfig& config,
                                     const std::string& checkpoint_path,
                                     const std::string& split = "test");

// Per-utterance and corpus-mean metrics of noisy-vs-clean and
// enhanced-vs-clean. Multiple checkpoints produce one report each plus a
// side-by-side comparison table.
std::vector<metrics::MetricReport> cmd_evaluate(const ExperimentConfig& config,
                                                const std::vector<std::string>& checkpoints);

}  // namespace neurovox::pipeline

#endif  // NEUROVOX_PIPELINE_COMMANDS_H_
