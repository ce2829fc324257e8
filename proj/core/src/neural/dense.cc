// core/src/neural/dense.cc

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

#include "neurovox/neural/dense.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace neurovox::neural {
namespace {

using Emat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double sigmoid(double z) {
  const double c = z < -500.0 ? -500.0 : (z > 500.0 ? 500.0 : z);
  return 1.0 / (1.0 + std::exp(-c));
}

}  // namespace

DenseLayer::DenseLayer(std::size_t input_dim, std::size_t output_dim, Activation activation)
    : input_dim_(input_dim),
      output_dim_(output_dim),
      activation_(activation),
      w_(output_dim, input_dim),
      b_(output_dim, 0.0),
      dw_(output_dim, input_dim),
      db_(output_dim, 0.0) {
  if (input_dim == 0 || output_dim == 0) {
    throw std::invalid_argument("DenseLayer: dimensions must be positive");
  }
}

void DenseLayer::init(Rng& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(input_dim_));
  for (std::size_t i = 0; i < w_.size(); ++i) w_.data()[i] = rng.uniform(-bound, bound);
  for (double& v : b_) v = 0.0;
}

Tensor3 DenseLayer::forward(const Tensor3& x, DenseCache* cache) const {
  if (x.features != input_dim_) {
    throw std::invalid_argument("DenseLayer::forward: input width mismatch");
  }
  Tensor3 out(x.batch, x.time, output_dim_);
  Eigen::Map<const Emat> xm(x.values.data(), static_cast<Eigen::Index>(x.batch * x.time),
                            static_cast<Eigen::Index>(input_dim_));
  Eigen::Map<const Emat> wm(w_.data(), static_cast<Eigen::Index>(output_dim_),
                            static_cast<Eigen::Index>(input_dim_));
  Eigen::Map<Emat> om(out.values.data(), static_cast<Eigen::Index>(x.batch * x.time),
                      static_cast<Eigen::Index>(output_dim_));
  om.noalias() = xm * wm.transpose();
  for (Eigen::Index r = 0; r < om.rows(); ++r) {
    for (std::size_t j = 0; j < output_dim_; ++j) om(r, static_cast<Eigen::Index>(j)) += b_[j];
  }
  if (activation_ == Activation::kSigmoid) {
    for (double& v : out.values) v = sigmoid(v);
  }
  if (cache != nullptr) {
    cache->input = x;
    cache->output = out;
  }
  return out;
}

Tensor3 DenseLayer::backward(const DenseCache& cache, const Tensor3& grad_out) {
  const Tensor3& x = cache.input;
  if (grad_out.batch != x.batch || grad_out.time != x.time ||
      grad_out.features != output_dim_) {
    throw std::invalid_argument("DenseLayer::backward: grad shape does not match cache");
  }
  // Pre-activation gradient.
  Tensor3 dz = grad_out;
  if (activation_ == Activation::kSigmoid) {
    for (std::size_t i = 0; i < dz.values.size(); ++i) {
      const double y = cache.output.values[i];
      dz.values[i] *= y * (1.0 - y);
    }
  }

  Eigen::Map<const Emat> dzm(dz.values.data(), static_cast<Eigen::Index>(x.batch * x.time),
                             static_cast<Eigen::Index>(output_dim_));
  Eigen::Map<const Emat> xm(x.values.data(), static_cast<Eigen::Index>(x.batch * x.time),
                            static_cast<Eigen::Index>(input_dim_));
  Eigen::Map<Emat> dwm(dw_.data(), static_cast<Eigen::Index>(output_dim_),
                       static_cast<Eigen::Index>(input_dim_));
  dwm.noalias() += dzm.transpose() * xm;
  for (std::size_t j = 0; j < output_dim_; ++j) {
    double acc = 0.0;
    for (Eigen::Index r = 0; r < dzm.rows(); ++r) acc += dzm(r, static_cast<Eigen::Index>(j));
    db_[j] += acc;
  }

  Tensor3 dx(x.batch, x.time, input_dim_);
  Eigen::Map<Emat> dxm(dx.values.data(), static_cast<Eigen::Index>(x.batch * x.time),
                       static_cast<Eigen::Index>(input_dim_));
  Eigen::Map<const Emat> wm(w_.data(), static_cast<Eigen::Index>(output_dim_),
                            static_cast<Eigen::Index>(input_dim_));
  dxm.noalias() = dzm * wm;
  return dx;
}

void DenseLayer::zero_grads() {
  for (std::size_t i = 0; i < dw_.size(); ++i) dw_.data()[i] = 0.0;
  for (double& v : db_) v = 0.0;
}

std::vector<ParamView> DenseLayer::params(const std::string& prefix) {
  return {
      {prefix + ".w", w_.data(), dw_.data(), w_.size()},
      {prefix + ".b", b_.data(), db_.data(), b_.size()},
  };
}

}  // namespace neurovox::neural
