// core/include/neurovox/neural/tensor.h

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

#ifndef NEUROVOX_NEURAL_TENSOR_H_
#define NEUROVOX_NEURAL_TENSOR_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "neurovox/common/matrix.h"

namespace neurovox::neural {

// 2-D activations and parameters reuse the shared row-major Matrix.
using Tensor2 = Matrix;

// Row-major (batch, time, features) array.
struct Tensor3 {
  std::vector<double> values;
  std::size_t batch = 0;
  std::size_t time = 0;
  std::size_t features = 0;

  Tensor3() = default;
  Tensor3(std::size_t b, std::size_t t, std::size_t f, double fill = 0.0)
      : values(b * t * f, fill), batch(b), time(t), features(f) {}

  double& at(std::size_t b, std::size_t t, std::size_t f) {
    return values[(b * time + t) * features + f];
  }
  double at(std::size_t b, std::size_t t, std::size_t f) const {
    return values[(b * time + t) * features + f];
  }

  std::span<double> frame(std::size_t b, std::size_t t) {
    return {values.data() + (b * time + t) * features, features};
  }
  std::span<const double> frame(std::size_t b, std::size_t t) const {
    return {values.data() + (b * time + t) * features, features};
  }

  std::size_t size() const { return values.size(); }

  bool all_finite() const {
    for (double v : values) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }
};

}  // namespace neurovox::neural

#endif  // NEUROVOX_NEURAL_TENSOR_H_
