// core/src/neural/loss.cc

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

#include "neurovox/neural/loss.h"

#include <stdexcept>

namespace neurovox::neural {
namespace {

void check_shapes(const Tensor3& pred, const Tensor3& target) {
  if (pred.batch != target.batch || pred.time != target.time ||
      pred.features != target.features) {
    throw std::invalid_argument("mse_loss: shape mismatch");
  }
  if (pred.size() == 0) throw std::invalid_argument("mse_loss: empty tensors");
}

}  // namespace

LossResult mse_loss(const Tensor3& pred, const Tensor3& target) {
  check_shapes(pred, target);
  LossResult r;
  r.grad = Tensor3(pred.batch, pred.time, pred.features);
  const double n = static_cast<double>(pred.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred.values[i] - target.values[i];
    acc += d * d;
    r.grad.values[i] = 2.0 * d / n;
  }
  r.value = acc / n;
  return r;
}

LossResult mse_loss_masked(const Tensor3& pred, const Tensor3& target,
                           const std::vector<std::size_t>& lengths) {
  check_shapes(pred, target);
  if (lengths.size() != pred.batch) {
    throw std::invalid_argument("mse_loss_masked: lengths/batch mismatch");
  }
  std::size_t valid = 0;
  for (std::size_t b = 0; b < pred.batch; ++b) {
    if (lengths[b] > pred.time) {
      throw std::invalid_argument("mse_loss_masked: length exceeds time dimension");
    }
    valid += lengths[b] * pred.features;
  }
  if (valid == 0) throw std::invalid_argument("mse_loss_masked: no valid frames");

  LossResult r;
  r.grad = Tensor3(pred.batch, pred.time, pred.features);
  const double n = static_cast<double>(valid);
  double acc = 0.0;
  for (std::size_t b = 0; b < pred.batch; ++b) {
    for (std::size_t t = 0; t < lengths[b]; ++t) {
      const auto p = pred.frame(b, t);
      const auto y = target.frame(b, t);
      const auto g = r.grad.frame(b, t);
      for (std::size_t f = 0; f < pred.features; ++f) {
        const double d = p[f] - y[f];
        acc += d * d;
        g[f] = 2.0 * d / n;
      }
    }
  }
  r.value = acc / n;
  return r;
}

}  // namespace neurovox::neural
