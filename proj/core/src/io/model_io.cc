// core/src/io/model_io.cc

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

#include "neurovox/io/model_io.h"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

namespace neurovox::io {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void put_params(Checkpoint& cp, const std::vector<neural::ParamView>& params) {
  for (const neural::ParamView& p : params) {
    CheckpointArray a;
    a.name = p.name;
    a.shape = {p.size};
    a.data.assign(p.value, p.value + p.size);
    cp.arrays.push_back(std::move(a));
  }
}

void put_adam(Checkpoint& cp, const neural::AdamState* adam) {
  if (adam == nullptr) return;
  CheckpointArray a;
  a.name = "adam.moments";
  a.data = adam->serialize_moments();
  a.shape = {a.data.size()};
  cp.arrays.push_back(std::move(a));
  cp.meta["adam.step"] = std::to_string(adam->step_count());
  cp.meta["adam.learning_rate"] = fmt_double(adam->config().learning_rate);
}

void restore_params(const Checkpoint& cp, const std::vector<neural::ParamView>& params) {
  for (const neural::ParamView& p : params) {
    const CheckpointArray& a = cp.array(p.name);
    if (a.data.size() != p.size) {
      throw std::runtime_error("checkpoint: array '" + p.name + "' has " +
                               std::to_string(a.data.size()) + " values, expected " +
                               std::to_string(p.size));
    }
    std::copy(a.data.begin(), a.data.end(), p.value);
  }
}

void restore_adam(const Checkpoint& cp, neural::AdamState* adam) {
  if (adam == nullptr || !cp.has_array("adam.moments")) return;
  const auto it = cp.meta.find("adam.step");
  const std::int64_t step = it != cp.meta.end() ? std::stoll(it->second) : 0;
  adam->restore(cp.array("adam.moments").data, step);
}

std::size_t meta_size(const Checkpoint& cp, const std::string& key) {
  const auto it = cp.meta.find(key);
  if (it == cp.meta.end()) {
    throw std::runtime_error("checkpoint: missing metadata '" + key + "'");
  }
  return static_cast<std::size_t>(std::stoull(it->second));
}

double meta_double(const Checkpoint& cp, const std::string& key) {
  const auto it = cp.meta.find(key);
  if (it == cp.meta.end()) {
    throw std::runtime_error("checkpoint: missing metadata '" + key + "'");
  }
  return std::stod(it->second);
}

void check_kind(const Checkpoint& cp, const std::string& expected) {
  if (cp.kind != expected) {
    throw std::runtime_error("checkpoint: kind '" + cp.kind + "', expected '" + expected +
                             "'");
  }
}

}  // namespace

Checkpoint checkpoint_from_lstm(models::LstmRegressionModel& model,
                                const neural::AdamState* adam, std::uint64_t seed,
                                std::int64_t epoch, std::uint64_t config_hash) {
  Checkpoint cp;
  cp.kind = "lstm_regression";
  cp.seed = seed;
  cp.epoch = epoch;
  cp.config_hash = config_hash;
  cp.meta["mfcc_dim"] = std::to_string(model.mfcc_dim());
  cp.meta["eeg_dim"] = std::to_string(model.eeg_dim());
  cp.meta["hidden_dim"] = std::to_string(model.hidden_dim());
  cp.meta["output_dim"] = std::to_string(model.output_dim());
  put_params(cp, model.params());
  put_adam(cp, adam);
  return cp;
}

std::unique_ptr<models::LstmRegressionModel> lstm_from_checkpoint(
    const Checkpoint& cp, neural::AdamState* adam, const neural::AdamConfig& adam_config) {
  check_kind(cp, "lstm_regression");
  auto model = std::make_unique<models::LstmRegressionModel>(
      meta_size(cp, "mfcc_dim"), meta_size(cp, "eeg_dim"), meta_size(cp, "hidden_dim"),
      meta_size(cp, "output_dim"));
  restore_params(cp, model->params());
  if (adam != nullptr) {
    *adam = neural::AdamState(model->params(), adam_config);
    restore_adam(cp, adam);
  }
  return model;
}

Checkpoint checkpoint_from_generator(models::Generator& model, const neural::AdamState* adam,
                                     std::uint64_t seed, std::int64_t epoch,
                                     std::uint64_t config_hash) {
  Checkpoint cp;
  cp.kind = "gan_generator";
  cp.seed = seed;
  cp.epoch = epoch;
  cp.config_hash = config_hash;
  cp.meta["mfcc_dim"] = std::to_string(model.mfcc_dim());
  cp.meta["eeg_dim"] = std::to_string(model.eeg_dim());
  cp.meta["hidden_dim"] = std::to_string(model.hidden_dim());
  cp.meta["output_dim"] = std::to_string(model.output_dim());
  put_params(cp, model.params());
  put_adam(cp, adam);
  return cp;
}

std::unique_ptr<models::Generator> generator_from_checkpoint(
    const Checkpoint& cp, neural::AdamState* adam, const neural::AdamConfig& adam_config) {
  check_kind(cp, "gan_generator");
  auto model = std::make_unique<models::Generator>(
      meta_size(cp, "mfcc_dim"), meta_size(cp, "eeg_dim"), meta_size(cp, "hidden_dim"),
      meta_size(cp, "output_dim"));
  restore_params(cp, model->params());
  if (adam != nullptr) {
    *adam = neural::AdamState(model->params(), adam_config);
    restore_adam(cp, adam);
  }
  return model;
}

Checkpoint checkpoint_from_discriminator(models::Discriminator& model,
                                         const neural::AdamState* adam, std::uint64_t seed,
                                         std::int64_t epoch, std::uint64_t config_hash) {
  Checkpoint cp;
  cp.kind = "gan_discriminator";
  cp.seed = seed;
  cp.epoch = epoch;
  cp.config_hash = config_hash;
  cp.meta["mfcc_dim"] = std::to_string(model.mfcc_dim());
  cp.meta["eeg_dim"] = std::to_string(model.eeg_dim());
  cp.meta["hidden_dim"] = std::to_string(model.hidden_dim());
  put_params(cp, model.params());
  put_adam(cp, adam);
  return cp;
}

std::unique_ptr<models::Discriminator> discriminator_from_checkpoint(
    const Checkpoint& cp, neural::AdamState* adam, const neural::AdamConfig& adam_config) {
  check_kind(cp, "gan_discriminator");
  auto model = std::make_unique<models::Discriminator>(
      meta_size(cp, "mfcc_dim"), meta_size(cp, "eeg_dim"), meta_size(cp, "hidden_dim"));
  restore_params(cp, model->params());
  if (adam != nullptr) {
    *adam = neural::AdamState(model->params(), adam_config);
    restore_adam(cp, adam);
  }
  return model;
}

Checkpoint checkpoint_from_kpca(const dimred::KpcaModel& model, std::uint64_t seed,
                                std::uint64_t config_hash) {
  Checkpoint cp;
  cp.kind = "kpca";
  cp.seed = seed;
  cp.epoch = -1;
  cp.config_hash = config_hash;
  cp.meta["input_dim"] = std::to_string(model.input_dim);
  cp.meta["output_dim"] = std::to_string(model.output_dim);
  cp.meta["gamma"] = fmt_double(model.gamma);
  cp.meta["coef0"] = fmt_double(model.coef0);
  cp.meta["degree"] = std::to_string(model.degree);
  cp.meta["kernel_grand_mean"] = fmt_double(model.kernel_grand_mean);

  const std::size_t n = model.training_points.rows();
  CheckpointArray points{"kpca.training_points",
                         {n, model.input_dim},
                         {model.training_points.data(),
                          model.training_points.data() + model.training_points.size()}};
  CheckpointArray alphas{
      "kpca.alphas",
      {n, model.output_dim},
      {model.alphas.data(), model.alphas.data() + model.alphas.size()}};
  CheckpointArray eigenvalues{"kpca.eigenvalues",
                              {model.eigenvalues.size()},
                              model.eigenvalues};
  CheckpointArray col_mean{"kpca.kernel_col_mean",
                           {model.kernel_col_mean.size()},
                           model.kernel_col_mean};
  cp.arrays = {std::move(points), std::move(alphas), std::move(eigenvalues),
               std::move(col_mean)};
  return cp;
}

void attach_scaler(Checkpoint& cp, const models::FeatureScaler& scaler) {
  cp.arrays.push_back({"scaler.mfcc_mean", {scaler.mfcc_mean.size()}, scaler.mfcc_mean});
  cp.arrays.push_back({"scaler.mfcc_std", {scaler.mfcc_std.size()}, scaler.mfcc_std});
  cp.arrays.push_back({"scaler.eeg_mean", {scaler.eeg_mean.size()}, scaler.eeg_mean});
  cp.arrays.push_back({"scaler.eeg_std", {scaler.eeg_std.size()}, scaler.eeg_std});
}

bool has_scaler(const Checkpoint& cp) { return cp.has_array("scaler.mfcc_mean"); }

models::FeatureScaler scaler_from_checkpoint(const Checkpoint& cp) {
  models::FeatureScaler scaler;
  scaler.mfcc_mean = cp.array("scaler.mfcc_mean").data;
  scaler.mfcc_std = cp.array("scaler.mfcc_std").data;
  scaler.eeg_mean = cp.array("scaler.eeg_mean").data;
  scaler.eeg_std = cp.array("scaler.eeg_std").data;
  return scaler;
}

dimred::KpcaModel kpca_from_checkpoint(const Checkpoint& cp) {
  check_kind(cp, "kpca");
  dimred::KpcaModel model;
  model.input_dim = meta_size(cp, "input_dim");
  model.output_dim = meta_size(cp, "output_dim");
  model.gamma = meta_double(cp, "gamma");
  model.coef0 = meta_double(cp, "coef0");
  model.degree = static_cast<int>(meta_size(cp, "degree"));
  model.kernel_grand_mean = meta_double(cp, "kernel_grand_mean");

  const CheckpointArray& points = cp.array("kpca.training_points");
  if (points.shape.size() != 2) {
    throw std::runtime_error("checkpoint: kpca.training_points must be 2-D");
  }
  model.training_points = Matrix(points.shape[0], points.shape[1]);
  std::copy(points.data.begin(), points.data.end(), model.training_points.data());

  const CheckpointArray& alphas = cp.array("kpca.alphas");
  if (alphas.shape.size() != 2) {
    throw std::runtime_error("checkpoint: kpca.alphas must be 2-D");
  }
  model.alphas = Matrix(alphas.shape[0], alphas.shape[1]);
  std::copy(alphas.data.begin(), alphas.data.end(), model.alphas.data());

  model.eigenvalues = cp.array("kpca.eigenvalues").data;
  model.kernel_col_mean = cp.array("kpca.kernel_col_mean").data;
  return model;
}

}  // namespace neurovox::io
