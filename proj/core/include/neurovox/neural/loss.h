// core/include/neurovox/neural/loss.h

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

#ifndef NEUROVOX_NEURAL_LOSS_H_
#define NEUROVOX_NEURAL_LOSS_H_

#include <cstddef>
#include <vector>

#include "neurovox/neural/tensor.h"

namespace neurovox::neural {

struct LossResult {
  double value = 0.0;
  Tensor3 grad;
};

// Mean over all elements of the squared difference; gradient is
// 2*(pred - target)/N.
LossResult mse_loss(const Tensor3& pred, const Tensor3& target);

// Same, but padded frames (t >= lengths[b]) are excluded from both the mean
// and the gradient.
LossResult mse_loss_masked(const Tensor3& pred, const Tensor3& target,
                           const std::vector<std::size_t>& lengths);

}  // namespace neurovox::neural

#endif  // NEUROVOX_NEURAL_LOSS_H_
