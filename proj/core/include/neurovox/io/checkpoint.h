// core/include/neurovox/io/checkpoint.h

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

#ifndef NEUROVOX_IO_CHECKPOINT_H_
#define NEUROVOX_IO_CHECKPOINT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace neurovox::io {

// Named f64 array inside a checkpoint payload.
struct CheckpointArray {
  std::string name;
  std::vector<std::size_t> shape;
  std::vector<double> data;

  std::size_t element_count() const {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
  }
};

// Model/optimizer persistence container:
//   "NVCK" magic | u32 LE header length | header JSON | arrays f64 LE
// The header declares kind, seed, epoch, a config hash, per-array shapes in
// payload order, free-form string metadata and an FNV-1a hash of the payload
// bytes. Loading verifies the payload hash and the declared byte length;
// a mismatch always fails, never reinterprets.
struct Checkpoint {
  std::string kind;  // "lstm_regression" | "gan_generator" | "gan_discriminator" | "kpca"
  std::uint64_t seed = 0;
  std::int64_t epoch = -1;  // last completed epoch, -1 when untrained
  std::uint64_t config_hash = 0;
  std::map<std::string, std::string> meta;
  std::vector<CheckpointArray> arrays;

  const CheckpointArray& array(const std::string& name) const;
  bool has_array(const std::string& name) const;
};

void save_checkpoint(const std::string& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::string& path);

// FNV-1a over arbitrary bytes; also used for config hashing.
std::uint64_t fnv1a_hash(const void* data, std::size_t bytes);
std::uint64_t fnv1a_hash(const std::string& text);

}  // namespace neurovox::io

#endif  // NEUROVOX_IO_CHECKPOINT_H_
