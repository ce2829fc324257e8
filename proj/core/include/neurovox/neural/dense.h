// core/include/neurovox/neural/dense.h

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

#ifndef NEUROVOX_NEURAL_DENSE_H_
#define NEUROVOX_NEURAL_DENSE_H_

#include <string>
#include <vector>

#include "neurovox/common/matrix.h"
#include "neurovox/common/rng.h"
#include "neurovox/neural/adam.h"
#include "neurovox/neural/tensor.h"

namespace neurovox::neural {

enum class Activation { kIdentity, kSigmoid };

struct DenseCache {
  Tensor3 input;
  Tensor3 output;  // post-activation, needed for the sigmoid derivative
};

// Affine map (optionally sigmoid-squashed) applied identically at every time
// step ("time distributed").
class DenseLayer {
 public:
  DenseLayer(std::size_t input_dim, std::size_t output_dim,
             Activation activation = Activation::kIdentity);

  void init(Rng& rng);

  std::size_t input_dim() const { return input_dim_; }
  std::size_t output_dim() const { return output_dim_; }
  Activation activation() const { return activation_; }

  Tensor3 forward(const Tensor3& x, DenseCache* cache = nullptr) const;

  // Accumulates parameter gradients, returns input gradient.
  Tensor3 backward(const DenseCache& cache, const Tensor3& grad_out);

  void zero_grads();
  std::vector<ParamView> params(const std::string& prefix);

  Matrix& w() { return w_; }
  std::vector<double>& b() { return b_; }
  const Matrix& w() const { return w_; }
  const std::vector<double>& b() const { return b_; }

 private:
  std::size_t input_dim_;
  std::size_t output_dim_;
  Activation activation_;
  Matrix w_;  // out x in
  std::vector<double> b_;
  Matrix dw_;
  std::vector<double> db_;
};

}  // namespace neurovox::neural

#endif  // NEUROVOX_NEURAL_DENSE_H_
