// tools/neurovox.cc

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

// Command line front end:
//   neurovox synth    --preset desk --seed 7 --out data/
//   neurovox extract  --config experiment.json
//   neurovox train    --config experiment.json [--model gan] [--epochs N]
//   neurovox enhance  --config experiment.json --checkpoint models/lstm.nvck
//   neurovox evaluate --config experiment.json --checkpoint a.nvck [--checkpoint b.nvck]
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neurovox/pipeline/commands.h"

namespace {

using neurovox::pipeline::ExperimentConfig;

struct CommonConfigArgs {
  std::string config_path;
  std::string model;
  std::optional<int> epochs;
  std::optional<int> batch_size;
  std::optional<double> learning_rate;
  std::optional<std::uint64_t> master_seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> manifest;
  std::optional<int> threads;
};

void add_config_options(CLI::App* cmd, CommonConfigArgs& args, bool allow_model) {
  cmd->add_option("--config", args.config_path, "Experiment config JSON")
      ->required()
      ->check(CLI::ExistingFile);
  if (allow_model) {
    cmd->add_option("--model", args.model, "Model override: lstm | gan");
  }
  cmd->add_option("--epochs", args.epochs, "Training epochs override");
  cmd->add_option("--batch", args.batch_size, "Batch size override");
  cmd->add_option("--lr", args.learning_rate, "Learning rate override");
  cmd->add_option("--seed", args.master_seed, "Master seed override");
  cmd->add_option("--out", args.out_dir, "Output directory override");
  cmd->add_option("--manifest", args.manifest, "Corpus manifest override");
  cmd->add_option("--threads", args.threads, "Worker thread cap (or NEUROVOX_THREADS)");
}

ExperimentConfig resolve_config(const CommonConfigArgs& args) {
  ExperimentConfig config = neurovox::pipeline::load_experiment_config(args.config_path);
  if (!args.model.empty()) {
    config.model = args.model;
    config.train = neurovox::pipeline::default_train_config(args.model);
  }
  if (args.epochs) config.train.epochs = *args.epochs;
  if (args.batch_size) config.train.batch_size = *args.batch_size;
  if (args.learning_rate) config.train.learning_rate = *args.learning_rate;
  if (args.master_seed) config.master_seed = *args.master_seed;
  if (args.out_dir) config.out_dir = *args.out_dir;
  if (args.manifest) config.manifest_path = *args.manifest;
  if (args.threads) config.threads = *args.threads;
  neurovox::pipeline::validate(config);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EEG-conditioned speech enhancement pipeline"};
  app.require_subcommand(1);

  // synth
  neurovox::pipeline::SynthOptions synth_options;
  CLI::App* synth = app.add_subcommand("synth", "Generate a seeded synthetic corpus");
  synth->add_option("--preset", synth_options.preset, "Corpus preset: desk | paper-shape");
  synth->add_option("--seed", synth_options.seed, "Master corpus seed");
  synth->add_option("--out", synth_options.out_dir, "Output directory")->required();
  synth->add_option("--train-utts", synth_options.n_train_utterances,
                    "Override train utterance count");
  synth->add_option("--test-utts", synth_options.n_test_utterances,
                    "Override test utterance count");
  synth->add_option("--duration", synth_options.duration_s, "Utterance duration (s)");
  synth->add_option("--noise-level", synth_options.noise_level_db,
                    "Test background level (nominal dB, 65 = -5 dB SNR mixture)");

  // extract / train / enhance / evaluate share config plumbing
  CommonConfigArgs extract_args, train_args, enhance_args, evaluate_args;
  CLI::App* extract = app.add_subcommand("extract", "Extract features and fit kernel PCA");
  add_config_options(extract, extract_args, false);

  CLI::App* train = app.add_subcommand("train", "Train the enhancement model");
  add_config_options(train, train_args, true);

  CLI::App* enhance = app.add_subcommand("enhance", "Reconstruct enhanced audio");
  std::string enhance_checkpoint;
  std::string enhance_split = "test";
  add_config_options(enhance, enhance_args, false);
  enhance->add_option("--checkpoint", enhance_checkpoint, "Model checkpoint")->required();
  enhance->add_option("--split", enhance_split, "Corpus split (default test)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score enhanced against clean audio");
  std::vector<std::string> evaluate_checkpoints;
  add_config_options(evaluate, evaluate_args, false);
  evaluate->add_option("--checkpoint", evaluate_checkpoints,
                       "Model checkpoint (repeat to compare)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed()) {
      const auto manifest = neurovox::pipeline::cmd_synth(synth_options);
      std::printf("wrote %zu utterances under %s\n", manifest.utterances.size(),
                  synth_options.out_dir.c_str());
    } else if (extract->parsed()) {
      neurovox::pipeline::cmd_extract(resolve_config(extract_args));
      std::printf("features extracted\n");
    } else if (train->parsed()) {
      const auto outcome = neurovox::pipeline::cmd_train(resolve_config(train_args));
      std::printf("checkpoint: %s\n", outcome.checkpoint_path.c_str());
      if (!outcome.discriminator_checkpoint_path.empty()) {
        std::printf("discriminator: %s\n", outcome.discriminator_checkpoint_path.c_str());
      }
    } else if (enhance->parsed()) {
      const auto written = neurovox::pipeline::cmd_enhance(resolve_config(enhance_args),
                                                           enhance_checkpoint, enhance_split);
      std::printf("wrote %zu enhanced files\n", written.size());
    } else if (evaluate->parsed()) {
      const auto reports = neurovox::pipeline::cmd_evaluate(resolve_config(evaluate_args),
                                                            evaluate_checkpoints);
      for (const auto& report : reports) {
        const auto m = report.means();
        std::printf("%s: stoi %.4f -> %.4f, snr %.4f -> %.4f (%zu utts, %zu skipped)\n",
                    report.model.c_str(), m.stoi_noisy, m.stoi_enhanced, m.snr_noisy,
                    m.snr_enhanced, report.records.size(), report.skipped.size());
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
