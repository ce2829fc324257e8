// core/include/neurovox/io/model_io.h

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

#ifndef NEUROVOX_IO_MODEL_IO_H_
#define NEUROVOX_IO_MODEL_IO_H_

#include <cstdint>
#include <memory>

#include "neurovox/dimred/kpca.h"
#include "neurovox/io/checkpoint.h"
#include "neurovox/models/gan.h"
#include "neurovox/models/lstm_regression.h"
#include "neurovox/models/train.h"
#include "neurovox/neural/adam.h"

namespace neurovox::io {

// Model <-> checkpoint bridges. Parameter blocks are stored one array per
// ParamView in declared order; optimizer moments ride along when an
// AdamState is supplied, so an interrupted run resumes bit-exactly.

Checkpoint checkpoint_from_lstm(models::LstmRegressionModel& model,
                                const neural::AdamState* adam, std::uint64_t seed,
                                std::int64_t epoch, std::uint64_t config_hash);

Checkpoint checkpoint_from_generator(models::Generator& model, const neural::AdamState* adam,
                                     std::uint64_t seed, std::int64_t epoch,
                                     std::uint64_t config_hash);

Checkpoint checkpoint_from_discriminator(models::Discriminator& model,
                                         const neural::AdamState* adam, std::uint64_t seed,
                                         std::int64_t epoch, std::uint64_t config_hash);

// Reconstruct models (dims come from checkpoint metadata). When `adam` is
// non-null and the checkpoint carries optimizer state, it is restored with
// the given config.
std::unique_ptr<models::LstmRegressionModel> lstm_from_checkpoint(
    const Checkpoint& cp, neural::AdamState* adam = nullptr,
    const neural::AdamConfig& adam_config = {});

std::unique_ptr<models::Generator> generator_from_checkpoint(
    const Checkpoint& cp, neural::AdamState* adam = nullptr,
    const neural::AdamConfig& adam_config = {});

std::unique_ptr<models::Discriminator> discriminator_from_checkpoint(
    const Checkpoint& cp, neural::AdamState* adam = nullptr,
    const neural::AdamConfig& adam_config = {});

Checkpoint checkpoint_from_kpca(const dimred::KpcaModel& model, std::uint64_t seed,
                                std::uint64_t config_hash);
dimred::KpcaModel kpca_from_checkpoint(const Checkpoint& cp);

// Feature standardization travels with the model; enhance refuses to run
// without it (the network was trained in scaled space).
void attach_scaler(Checkpoint& cp, const models::FeatureScaler& scaler);
bool has_scaler(const Checkpoint& cp);
models::FeatureScaler scaler_from_checkpoint(const Checkpoint& cp);

}  // namespace neurovox::io

#endif  // NEUROVOX_IO_MODEL_IO_H_
