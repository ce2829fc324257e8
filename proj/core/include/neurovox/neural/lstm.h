// core/include/neurovox/neural/lstm.h

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

#ifndef NEUROVOX_NEURAL_LSTM_H_
#define NEUROVOX_NEURAL_LSTM_H_

#include <string>
#include <vector>

#include "neurovox/common/matrix.h"
#include "neurovox/common/rng.h"
#include "neurovox/neural/adam.h"
#include "neurovox/neural/tensor.h"

namespace neurovox::neural {

// Forward activations retained for backpropagation through time.
struct LstmCache {
  Tensor3 input;
  Tensor3 gate_i, gate_f, gate_g, gate_o;  // post-activation gates, (B,T,H)
  Tensor3 cell, tanh_cell, hidden;
};

// Single LSTM layer. Weights are packed with gate order [input, forget,
// cell, output] along rows: w is (4H x In), u is (4H x H), bias is 4H.
// Initial hidden and cell state are zero; gates use the logistic sigmoid and
// the cell candidate/output squash is tanh.
class LstmLayer {
 public:
  LstmLayer(std::size_t input_dim, std::size_t hidden_dim);

  // uniform(-1/sqrt(fan_in), +1/sqrt(fan_in)) weights, zero biases except the
  // forget-gate bias at +1.
  void init(Rng& rng);

  std::size_t input_dim() const { return input_dim_; }
  std::size_t hidden_dim() const { return hidden_dim_; }

  // x is (B,T,input_dim); returns all hidden states (B,T,hidden_dim).
  Tensor3 forward(const Tensor3& x, LstmCache* cache = nullptr) const;

  // Exact BPTT. Accumulates parameter gradients into the layer's grad
  // buffers and returns the gradient with respect to the input.
  Tensor3 backward(const LstmCache& cache, const Tensor3& grad_out);

  void zero_grads();
  std::vector<ParamView> params(const std::string& prefix);

  Matrix& w() { return w_; }
  Matrix& u() { return u_; }
  std::vector<double>& b() { return b_; }
  const Matrix& w() const { return w_; }
  const Matrix& u() const { return u_; }
  const std::vector<double>& b() const { return b_; }

 private:
  std::size_t input_dim_;
  std::size_t hidden_dim_;
  Matrix w_, u_;            // 4H x In, 4H x H
  std::vector<double> b_;   // 4H
  Matrix dw_, du_;
  std::vector<double> db_;
};

// Gathers hidden state at (length-1) per sequence: (B,T,H) -> (B,1,H).
Tensor3 gather_last_step(const Tensor3& all_steps, const std::vector<std::size_t>& lengths);

// Adjoint of gather_last_step: scatters (B,1,H) back to a zero (B,T,H).
Tensor3 scatter_last_step(const Tensor3& grad_last, std::size_t time,
                          const std::vector<std::size_t>& lengths);

}  // namespace neurovox::neural

#endif  // NEUROVOX_NEURAL_LSTM_H_
