// core/src/neural/adam.cc

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

#include "neurovox/neural/adam.h"

#include <cmath>
#include <stdexcept>

namespace neurovox::neural {

AdamState::AdamState(const std::vector<ParamView>& params, const AdamConfig& config)
    : config_(config) {
  m_.reserve(params.size());
  v_.reserve(params.size());
  for (const ParamView& p : params) {
    m_.emplace_back(p.size, 0.0);
    v_.emplace_back(p.size, 0.0);
  }
}

void AdamState::step(const std::vector<ParamView>& params) {
  if (params.size() != m_.size()) {
    throw std::invalid_argument("adam_step: parameter block count changed");
  }
  for (const ParamView& p : params) {
    for (std::size_t i = 0; i < p.size; ++i) {
      if (!std::isfinite(p.grad[i])) {
        throw std::runtime_error("adam_step: non-finite gradient in block '" + p.name + "'");
      }
    }
  }
  ++step_count_;
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  const double bias1 = 1.0 - std::pow(b1, static_cast<double>(step_count_));
  const double bias2 = 1.0 - std::pow(b2, static_cast<double>(step_count_));
  for (std::size_t k = 0; k < params.size(); ++k) {
    const ParamView& p = params[k];
    if (p.size != m_[k].size()) {
      throw std::invalid_argument("adam_step: block '" + p.name + "' changed size");
    }
    for (std::size_t i = 0; i < p.size; ++i) {
      const double g = p.grad[i];
      m_[k][i] = b1 * m_[k][i] + (1.0 - b1) * g;
      v_[k][i] = b2 * v_[k][i] + (1.0 - b2) * g * g;
      const double m_hat = m_[k][i] / bias1;
      const double v_hat = v_[k][i] / bias2;
      p.value[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
  }
}

std::vector<double> AdamState::serialize_moments() const {
  std::vector<double> out;
  for (const auto& block : m_) out.insert(out.end(), block.begin(), block.end());
  for (const auto& block : v_) out.insert(out.end(), block.begin(), block.end());
  return out;
}

void AdamState::restore(const std::vector<double>& moments, std::int64_t step_count) {
  std::size_t total = 0;
  for (const auto& block : m_) total += block.size();
  if (moments.size() != 2 * total) {
    throw std::invalid_argument("AdamState::restore: moment payload size mismatch");
  }
  std::size_t pos = 0;
  for (auto& block : m_) {
    for (double& v : block) v = moments[pos++];
  }
  for (auto& block : v_) {
    for (double& v : block) v = moments[pos++];
  }
  step_count_ = step_count;
}

}  // namespace neurovox::neural
