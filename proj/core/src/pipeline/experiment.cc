// core/src/pipeline/experiment.cc

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

#include "neurovox/pipeline/experiment.h"

#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "neurovox/io/checkpoint.h"

namespace neurovox::pipeline {
namespace {

void check_known_keys(const nlohmann::json& j, const std::set<std::string>& known,
                      const std::string& scope) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (known.find(key) == known.end()) {
      throw std::runtime_error("experiment config: unknown key '" + scope + key + "'");
    }
  }
}

}  // namespace

models::TrainConfig default_train_config(const std::string& model) {
  models::TrainConfig config;
  config.sequence_length = 200;
  if (model == "lstm") {
    config.epochs = 1000;
    config.batch_size = 100;
    config.learning_rate = 1e-3;
  } else if (model == "gan") {
    config.epochs = 200;
    config.batch_size = 32;
    config.learning_rate = 1e-4;
  } else {
    throw std::invalid_argument("default_train_config: unknown model '" + model + "'");
  }
  return config;
}

void validate(const ExperimentConfig& config) {
  if (config.model != "lstm" && config.model != "gan") {
    throw std::invalid_argument("experiment config: model must be 'lstm' or 'gan'");
  }
  if (config.kpca.k < 1 || config.kpca.k > 155) {
    throw std::invalid_argument("experiment config: kpca k must be in [1, 155]");
  }
  if (!(config.mfcc_noise_sigma >= 0.0)) {
    throw std::invalid_argument("experiment config: mfcc noise sigma must be >= 0");
  }
  models::validate(config.train);
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_experiment_config: cannot open " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_experiment_config: parse error in " + path + ": " +
                             e.what());
  }

  check_known_keys(j,
                   {"manifest", "out_dir", "model", "kpca", "train", "mfcc_noise_sigma",
                    "use_raw_eeg", "master_seed", "pesq_command", "threads"},
                   "");

  ExperimentConfig config;
  config.manifest_path = j.value("manifest", "");
  config.out_dir = j.value("out_dir", "");
  config.model = j.value("model", "lstm");
  config.train = default_train_config(config.model);
  config.mfcc_noise_sigma = j.value("mfcc_noise_sigma", 10.0);
  config.use_raw_eeg = j.value("use_raw_eeg", false);
  config.master_seed = j.value("master_seed", std::uint64_t{0});
  config.pesq_command = j.value("pesq_command", "");
  config.threads = j.value("threads", 0);

  if (j.contains("kpca")) {
    const auto& k = j["kpca"];
    check_known_keys(k, {"k", "gamma", "coef0", "degree", "max_train_points"}, "kpca.");
    config.kpca.k = k.value("k", config.kpca.k);
    config.kpca.params.gamma = k.value("gamma", config.kpca.params.gamma);
    config.kpca.params.coef0 = k.value("coef0", config.kpca.params.coef0);
    config.kpca.params.degree = k.value("degree", config.kpca.params.degree);
    config.kpca.params.max_train_points =
        k.value("max_train_points", config.kpca.params.max_train_points);
  }
  if (j.contains("train")) {
    const auto& t = j["train"];
    check_known_keys(t,
                     {"epochs", "batch_size", "learning_rate", "learning_rate_d",
                      "sequence_length", "seed", "grad_clip"},
                     "train.");
    config.train.epochs = t.value("epochs", config.train.epochs);
    config.train.batch_size = t.value("batch_size", config.train.batch_size);
    config.train.learning_rate = t.value("learning_rate", config.train.learning_rate);
    config.train.learning_rate_d = t.value("learning_rate_d", config.train.learning_rate_d);
    config.train.sequence_length = t.value("sequence_length", config.train.sequence_length);
    config.train.seed = t.value("seed", config.train.seed);
    config.train.grad_clip = t.value("grad_clip", config.train.grad_clip);
  }
  validate(config);
  return config;
}

void save_experiment_config(const ExperimentConfig& config, const std::string& path) {
  nlohmann::json j;
  j["manifest"] = config.manifest_path;
  j["out_dir"] = config.out_dir;
  j["model"] = config.model;
  j["kpca"] = {{"k", config.kpca.k},
               {"gamma", config.kpca.params.gamma},
               {"coef0", config.kpca.params.coef0},
               {"degree", config.kpca.params.degree},
               {"max_train_points", config.kpca.params.max_train_points}};
  j["train"] = {{"epochs", config.train.epochs},
                {"batch_size", config.train.batch_size},
                {"learning_rate", config.train.learning_rate},
                {"learning_rate_d", config.train.learning_rate_d},
                {"sequence_length", config.train.sequence_length},
                {"seed", config.train.seed},
                {"grad_clip", config.train.grad_clip}};
  j["mfcc_noise_sigma"] = config.mfcc_noise_sigma;
  j["use_raw_eeg"] = config.use_raw_eeg;
  j["master_seed"] = config.master_seed;
  j["pesq_command"] = config.pesq_command;
  j["threads"] = config.threads;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_experiment_config: cannot open " + path);
  os << j.dump(2) << "\n";
}

std::string canonical_config_json(const ExperimentConfig& config) {
  // Paths, logging and threading do not change what a checkpoint means.
  // The epoch count is also excluded: training further under the same
  // schedule is a prefix-compatible continuation, which is exactly what
  // resume-from-last-checkpoint relies on.
  nlohmann::json j;
  j["model"] = config.model;
  j["kpca"] = {{"k", config.kpca.k},
               {"gamma", config.kpca.params.gamma},
               {"coef0", config.kpca.params.coef0},
               {"degree", config.kpca.params.degree},
               {"max_train_points", config.kpca.params.max_train_points}};
  j["train"] = {{"batch_size", config.train.batch_size},
                {"learning_rate", config.train.learning_rate},
                {"learning_rate_d", config.train.learning_rate_d},
                {"sequence_length", config.train.sequence_length},
                {"seed", config.train.seed},
                {"grad_clip", config.train.grad_clip}};
  j["mfcc_noise_sigma"] = config.mfcc_noise_sigma;
  j["use_raw_eeg"] = config.use_raw_eeg;
  j["master_seed"] = config.master_seed;
  return j.dump();
}

std::uint64_t config_hash(const ExperimentConfig& config) {
  return io::fnv1a_hash(canonical_config_json(config));
}

}  // namespace neurovox::pipeline
