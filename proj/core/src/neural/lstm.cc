// core/src/neural/lstm.cc

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

#include "neurovox/neural/lstm.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace neurovox::neural {
namespace {

using Emat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EmatMap = Eigen::Map<Emat>;
using ConstEmatMap = Eigen::Map<const Emat>;

double sigmoid(double z) {
  // Clamp keeps the output strictly inside (0,1) even for saturated inputs.
  const double c = z < -500.0 ? -500.0 : (z > 500.0 ? 500.0 : z);
  return 1.0 / (1.0 + std::exp(-c));
}

}  // namespace

LstmLayer::LstmLayer(std::size_t input_dim, std::size_t hidden_dim)
    : input_dim_(input_dim),
      hidden_dim_(hidden_dim),
      w_(4 * hidden_dim, input_dim),
      u_(4 * hidden_dim, hidden_dim),
      b_(4 * hidden_dim, 0.0),
      dw_(4 * hidden_dim, input_dim),
      du_(4 * hidden_dim, hidden_dim),
      db_(4 * hidden_dim, 0.0) {
  if (input_dim == 0 || hidden_dim == 0) {
    throw std::invalid_argument("LstmLayer: dimensions must be positive");
  }
}

void LstmLayer::init(Rng& rng) {
  const double w_bound = 1.0 / std::sqrt(static_cast<double>(input_dim_));
  for (std::size_t i = 0; i < w_.size(); ++i) w_.data()[i] = rng.uniform(-w_bound, w_bound);
  const double u_bound = 1.0 / std::sqrt(static_cast<double>(hidden_dim_));
  for (std::size_t i = 0; i < u_.size(); ++i) u_.data()[i] = rng.uniform(-u_bound, u_bound);
  for (double& v : b_) v = 0.0;
  // Forget-gate bias +1 keeps early training from flushing the cell state.
  for (std::size_t i = hidden_dim_; i < 2 * hidden_dim_; ++i) b_[i] = 1.0;
}

Tensor3 LstmLayer::forward(const Tensor3& x, LstmCache* cache) const {
  if (x.features != input_dim_) {
    throw std::invalid_argument("LstmLayer::forward: input width " +
                                std::to_string(x.features) + " != " +
                                std::to_string(input_dim_));
  }
  const std::size_t b = x.batch;
  const std::size_t t_len = x.time;
  const std::size_t h = hidden_dim_;

  Tensor3 hidden(b, t_len, h);
  LstmCache local;
  LstmCache& c = cache != nullptr ? *cache : local;
  c.input = x;
  c.gate_i = Tensor3(b, t_len, h);
  c.gate_f = Tensor3(b, t_len, h);
  c.gate_g = Tensor3(b, t_len, h);
  c.gate_o = Tensor3(b, t_len, h);
  c.cell = Tensor3(b, t_len, h);
  c.tanh_cell = Tensor3(b, t_len, h);

  ConstEmatMap wm(w_.data(), static_cast<Eigen::Index>(4 * h),
                  static_cast<Eigen::Index>(input_dim_));
  ConstEmatMap um(u_.data(), static_cast<Eigen::Index>(4 * h), static_cast<Eigen::Index>(h));
  ConstEmatMap xm(x.values.data(), static_cast<Eigen::Index>(b * t_len),
                  static_cast<Eigen::Index>(input_dim_));

  // One big input projection; the recurrent term is added per step.
  Emat xw = xm * wm.transpose();  // (B*T, 4H)

  Emat h_prev = Emat::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(h));
  Emat c_prev = Emat::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(h));
  Emat z(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(4 * h));

  for (std::size_t t = 0; t < t_len; ++t) {
    for (std::size_t row = 0; row < b; ++row) {
      z.row(static_cast<Eigen::Index>(row)) =
          xw.row(static_cast<Eigen::Index>(row * t_len + t));
    }
    z.noalias() += h_prev * um.transpose();
    for (std::size_t row = 0; row < b; ++row) {
      for (std::size_t j = 0; j < 4 * h; ++j) {
        z(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) += b_[j];
      }
    }
    for (std::size_t row = 0; row < b; ++row) {
      for (std::size_t j = 0; j < h; ++j) {
        const auto r = static_cast<Eigen::Index>(row);
        const double zi = z(r, static_cast<Eigen::Index>(j));
        const double zf = z(r, static_cast<Eigen::Index>(h + j));
        const double zg = z(r, static_cast<Eigen::Index>(2 * h + j));
        const double zo = z(r, static_cast<Eigen::Index>(3 * h + j));
        const double gi = sigmoid(zi);
        const double gf = sigmoid(zf);
        const double gg = std::tanh(zg);
        const double go = sigmoid(zo);
        const double cell = gf * c_prev(r, static_cast<Eigen::Index>(j)) + gi * gg;
        const double tc = std::tanh(cell);
        const double hh = go * tc;
        c.gate_i.at(row, t, j) = gi;
        c.gate_f.at(row, t, j) = gf;
        c.gate_g.at(row, t, j) = gg;
        c.gate_o.at(row, t, j) = go;
        c.cell.at(row, t, j) = cell;
        c.tanh_cell.at(row, t, j) = tc;
        hidden.at(row, t, j) = hh;
        h_prev(r, static_cast<Eigen::Index>(j)) = hh;
        c_prev(r, static_cast<Eigen::Index>(j)) = cell;
      }
    }
  }
  if (cache != nullptr) cache->hidden = hidden;
  return hidden;
}

Tensor3 LstmLayer::backward(const LstmCache& cache, const Tensor3& grad_out) {
  const std::size_t b = cache.input.batch;
  const std::size_t t_len = cache.input.time;
  const std::size_t h = hidden_dim_;
  if (grad_out.batch != b || grad_out.time != t_len || grad_out.features != h) {
    throw std::invalid_argument("LstmLayer::backward: grad shape does not match cache");
  }

  // dZ for every step, then the parameter gradients fall out of single GEMMs.
  Tensor3 dz_all(b, t_len, 4 * h);
  Emat dh_next = Emat::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(h));
  Emat dc_next = Emat::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(h));
  ConstEmatMap um(u_.data(), static_cast<Eigen::Index>(4 * h), static_cast<Eigen::Index>(h));

  Emat dz(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(4 * h));
  for (std::size_t t = t_len; t-- > 0;) {
    for (std::size_t row = 0; row < b; ++row) {
      const auto r = static_cast<Eigen::Index>(row);
      for (std::size_t j = 0; j < h; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        const double dh = grad_out.at(row, t, j) + dh_next(r, jj);
        const double gi = cache.gate_i.at(row, t, j);
        const double gf = cache.gate_f.at(row, t, j);
        const double gg = cache.gate_g.at(row, t, j);
        const double go = cache.gate_o.at(row, t, j);
        const double tc = cache.tanh_cell.at(row, t, j);
        const double c_prev = t > 0 ? cache.cell.at(row, t - 1, j) : 0.0;

        const double dc = dc_next(r, jj) + dh * go * (1.0 - tc * tc);
        const double d_o = dh * tc;
        const double d_i = dc * gg;
        const double d_g = dc * gi;
        const double d_f = dc * c_prev;

        dz(r, jj) = d_i * gi * (1.0 - gi);
        dz(r, static_cast<Eigen::Index>(h + j)) = d_f * gf * (1.0 - gf);
        dz(r, static_cast<Eigen::Index>(2 * h + j)) = d_g * (1.0 - gg * gg);
        dz(r, static_cast<Eigen::Index>(3 * h + j)) = d_o * go * (1.0 - go);
        dc_next(r, jj) = dc * gf;
      }
    }
    dh_next.noalias() = dz * um;
    for (std::size_t row = 0; row < b; ++row) {
      for (std::size_t j = 0; j < 4 * h; ++j) {
        dz_all.at(row, t, j) = dz(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j));
      }
    }
  }

  // Flattened views: (B*T, .)
  ConstEmatMap dz_flat(dz_all.values.data(), static_cast<Eigen::Index>(b * t_len),
                       static_cast<Eigen::Index>(4 * h));
  ConstEmatMap x_flat(cache.input.values.data(), static_cast<Eigen::Index>(b * t_len),
                      static_cast<Eigen::Index>(input_dim_));

  // Hidden states shifted one step back in time, zeros at t = 0.
  Tensor3 h_prev_all(b, t_len, h);
  for (std::size_t row = 0; row < b; ++row) {
    for (std::size_t t = 1; t < t_len; ++t) {
      for (std::size_t j = 0; j < h; ++j) {
        h_prev_all.at(row, t, j) = cache.hidden.at(row, t - 1, j);
      }
    }
  }
  ConstEmatMap hprev_flat(h_prev_all.values.data(), static_cast<Eigen::Index>(b * t_len),
                          static_cast<Eigen::Index>(h));

  EmatMap dwm(dw_.data(), static_cast<Eigen::Index>(4 * h),
              static_cast<Eigen::Index>(input_dim_));
  EmatMap dum(du_.data(), static_cast<Eigen::Index>(4 * h), static_cast<Eigen::Index>(h));
  dwm.noalias() += dz_flat.transpose() * x_flat;
  dum.noalias() += dz_flat.transpose() * hprev_flat;
  for (std::size_t j = 0; j < 4 * h; ++j) {
    double acc = 0.0;
    for (std::size_t row = 0; row < b * t_len; ++row) {
      acc += dz_flat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j));
    }
    db_[j] += acc;
  }

  Tensor3 dx(b, t_len, input_dim_);
  EmatMap dx_flat(dx.values.data(), static_cast<Eigen::Index>(b * t_len),
                  static_cast<Eigen::Index>(input_dim_));
  ConstEmatMap wm(w_.data(), static_cast<Eigen::Index>(4 * h),
                  static_cast<Eigen::Index>(input_dim_));
  dx_flat.noalias() = dz_flat * wm;
  return dx;
}

void LstmLayer::zero_grads() {
  for (std::size_t i = 0; i < dw_.size(); ++i) dw_.data()[i] = 0.0;
  for (std::size_t i = 0; i < du_.size(); ++i) du_.data()[i] = 0.0;
  for (double& v : db_) v = 0.0;
}

std::vector<ParamView> LstmLayer::params(const std::string& prefix) {
  return {
      {prefix + ".w", w_.data(), dw_.data(), w_.size()},
      {prefix + ".u", u_.data(), du_.data(), u_.size()},
      {prefix + ".b", b_.data(), db_.data(), b_.size()},
  };
}

Tensor3 gather_last_step(const Tensor3& all_steps, const std::vector<std::size_t>& lengths) {
  if (lengths.size() != all_steps.batch) {
    throw std::invalid_argument("gather_last_step: lengths/batch mismatch");
  }
  Tensor3 out(all_steps.batch, 1, all_steps.features);
  for (std::size_t row = 0; row < all_steps.batch; ++row) {
    if (lengths[row] == 0 || lengths[row] > all_steps.time) {
      throw std::invalid_argument("gather_last_step: invalid sequence length");
    }
    const auto src = all_steps.frame(row, lengths[row] - 1);
    const auto dst = out.frame(row, 0);
    for (std::size_t j = 0; j < all_steps.features; ++j) dst[j] = src[j];
  }
  return out;
}

Tensor3 scatter_last_step(const Tensor3& grad_last, std::size_t time,
                          const std::vector<std::size_t>& lengths) {
  if (grad_last.time != 1 || lengths.size() != grad_last.batch) {
    throw std::invalid_argument("scatter_last_step: bad shapes");
  }
  Tensor3 out(grad_last.batch, time, grad_last.features);
  for (std::size_t row = 0; row < grad_last.batch; ++row) {
    const auto src = grad_last.frame(row, 0);
    const auto dst = out.frame(row, lengths[row] - 1);
    for (std::size_t j = 0; j < grad_last.features; ++j) dst[j] = src[j];
  }
  return out;
}

}  // namespace neurovox::neural
