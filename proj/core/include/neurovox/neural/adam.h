// core/include/neurovox/neural/adam.h

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

#ifndef NEUROVOX_NEURAL_ADAM_H_
#define NEUROVOX_NEURAL_ADAM_H_

#include <cstdint>
#include <string>
#include <vector>

namespace neurovox::neural {

// Named view over one parameter block and its gradient accumulator. Layers
// own both arrays; views stay valid while the layer object does.
struct ParamView {
  std::string name;
  double* value = nullptr;
  double* grad = nullptr;
  std::size_t size = 0;
};

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Bias-corrected Adam over a fixed set of parameter blocks.
class AdamState {
 public:
  AdamState() = default;
  AdamState(const std::vector<ParamView>& params, const AdamConfig& config);

  // Applies one update from the gradients currently held in the views.
  // A non-finite gradient raises an error naming the offending block.
  void step(const std::vector<ParamView>& params);

  std::int64_t step_count() const { return step_count_; }
  const AdamConfig& config() const { return config_; }

  // Flat serialization of the optimizer state (first moments, then second
  // moments, block order preserved).
  std::vector<double> serialize_moments() const;
  void restore(const std::vector<double>& moments, std::int64_t step_count);

 private:
  AdamConfig config_;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
  std::int64_t step_count_ = 0;
};

}  // namespace neurovox::neural

#endif  // NEUROVOX_NEURAL_ADAM_H_
