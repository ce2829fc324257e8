// core/src/models/train.cc

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

#include "neurovox/models/train.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "neurovox/common/rng.h"
#include "neurovox/neural/loss.h"

namespace neurovox::models {
namespace {

struct Segment {
  std::size_t item = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
};

std::vector<Segment> make_segments(const TrainingSet& data, std::size_t seq_len) {
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < data.items.size(); ++i) {
    const std::size_t frames = data.items[i].clean_mfcc.rows();
    for (std::size_t off = 0; off < frames; off += seq_len) {
      const std::size_t len = std::min(seq_len, frames - off);
      if (len >= 2) segments.push_back({i, off, len});
    }
  }
  return segments;
}

void copy_segment(const Matrix& src, std::size_t offset, std::size_t length,
                  neural::Tensor3& dst, std::size_t batch_row) {
  for (std::size_t t = 0; t < length; ++t) {
    const auto row = src.row(offset + t);
    const auto frame = dst.frame(batch_row, t);
    std::copy(row.begin(), row.end(), frame.begin());
  }
}

struct Batch {
  neural::Tensor3 noisy;
  neural::Tensor3 eeg;
  neural::Tensor3 clean;
  neural::Tensor3 joint;  // noisy ++ eeg, for the regression model
  std::vector<std::size_t> lengths;
};

Batch pack_batch(const TrainingSet& data, const std::vector<Segment>& segments,
                 std::size_t first, std::size_t count, std::size_t seq_len,
                 bool build_joint) {
  Batch batch;
  batch.noisy = neural::Tensor3(count, seq_len, data.mfcc_dim);
  batch.eeg = neural::Tensor3(count, seq_len, data.eeg_dim);
  batch.clean = neural::Tensor3(count, seq_len, data.mfcc_dim);
  batch.lengths.resize(count);
  for (std::size_t b = 0; b < count; ++b) {
    const Segment& seg = segments[first + b];
    const TrainingTriple& item = data.items[seg.item];
    copy_segment(item.noisy_mfcc, seg.offset, seg.length, batch.noisy, b);
    copy_segment(item.eeg, seg.offset, seg.length, batch.eeg, b);
    copy_segment(item.clean_mfcc, seg.offset, seg.length, batch.clean, b);
    batch.lengths[b] = seg.length;
  }
  if (build_joint) {
    batch.joint = neural::Tensor3(count, seq_len, data.mfcc_dim + data.eeg_dim);
    for (std::size_t b = 0; b < count; ++b) {
      for (std::size_t t = 0; t < seq_len; ++t) {
        const auto nm = batch.noisy.frame(b, t);
        const auto ne = batch.eeg.frame(b, t);
        const auto out = batch.joint.frame(b, t);
        std::copy(nm.begin(), nm.end(), out.begin());
        std::copy(ne.begin(), ne.end(),
                  out.begin() + static_cast<std::ptrdiff_t>(data.mfcc_dim));
      }
    }
  }
  return batch;
}

void clip_gradients(const std::vector<neural::ParamView>& params, double max_norm) {
  if (max_norm <= 0.0) return;
  double norm2 = 0.0;
  for (const auto& p : params) {
    for (std::size_t i = 0; i < p.size; ++i) norm2 += p.grad[i] * p.grad[i];
  }
  const double norm = std::sqrt(norm2);
  if (norm <= max_norm) return;
  const double scale = max_norm / norm;
  for (const auto& p : params) {
    for (std::size_t i = 0; i < p.size; ++i) p.grad[i] *= scale;
  }
}

std::ofstream open_log(const std::string& path) {
  std::ofstream log;
  if (!path.empty()) {
    log.open(path, std::ios::app);
    if (!log) throw std::runtime_error("train: cannot open loss log " + path);
  }
  return log;
}

}  // namespace

void validate(const TrainConfig& config) {
  if (config.epochs < 1) throw std::invalid_argument("TrainConfig: epochs must be >= 1");
  if (config.batch_size < 1) throw std::invalid_argument("TrainConfig: batch size must be >= 1");
  if (config.sequence_length < 2) {
    throw std::invalid_argument("TrainConfig: sequence length must be >= 2");
  }
  if (!(config.learning_rate > 0.0)) {
    throw std::invalid_argument("TrainConfig: learning rate must be positive");
  }
  if (config.learning_rate_d < 0.0) {
    throw std::invalid_argument("TrainConfig: discriminator learning rate must be >= 0");
  }
}

void validate(const TrainingSet& set) {
  if (set.items.empty()) throw std::invalid_argument("TrainingSet: no utterances");
  for (const TrainingTriple& t : set.items) {
    if (t.noisy_mfcc.cols() != set.mfcc_dim || t.clean_mfcc.cols() != set.mfcc_dim) {
      throw std::invalid_argument("TrainingSet: cepstral width mismatch");
    }
    if (t.eeg.cols() != set.eeg_dim) {
      throw std::invalid_argument("TrainingSet: neural-feature width mismatch");
    }
    if (t.noisy_mfcc.rows() != t.clean_mfcc.rows() || t.noisy_mfcc.rows() != t.eeg.rows()) {
      throw std::invalid_argument("TrainingSet: unaligned frame counts");
    }
    if (!t.noisy_mfcc.all_finite() || !t.eeg.all_finite() || !t.clean_mfcc.all_finite()) {
      throw std::invalid_argument("TrainingSet: non-finite features");
    }
  }
}

namespace {

void column_stats(const std::vector<const Matrix*>& blocks, std::vector<double>& mean,
                  std::vector<double>& std_dev) {
  const std::size_t width = blocks.front()->cols();
  mean.assign(width, 0.0);
  std_dev.assign(width, 0.0);
  std::size_t rows = 0;
  for (const Matrix* m : blocks) rows += m->rows();
  for (const Matrix* m : blocks) {
    for (std::size_t r = 0; r < m->rows(); ++r) {
      for (std::size_t c = 0; c < width; ++c) mean[c] += (*m)(r, c);
    }
  }
  for (double& v : mean) v /= static_cast<double>(rows);
  for (const Matrix* m : blocks) {
    for (std::size_t r = 0; r < m->rows(); ++r) {
      for (std::size_t c = 0; c < width; ++c) {
        const double d = (*m)(r, c) - mean[c];
        std_dev[c] += d * d;
      }
    }
  }
  for (double& v : std_dev) v = std::max(std::sqrt(v / static_cast<double>(rows)), 1e-6);
}

Matrix affine_columns(const Matrix& m, const std::vector<double>& mean,
                      const std::vector<double>& std_dev, bool forward) {
  if (m.cols() != mean.size()) {
    throw std::invalid_argument("FeatureScaler: width mismatch");
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = forward ? (m(r, c) - mean[c]) / std_dev[c]
                          : m(r, c) * std_dev[c] + mean[c];
    }
  }
  return out;
}

}  // namespace

FeatureScaler FeatureScaler::fit(const TrainingSet& data) {
  validate(data);
  FeatureScaler scaler;
  std::vector<const Matrix*> clean, eeg;
  for (const TrainingTriple& t : data.items) {
    clean.push_back(&t.clean_mfcc);
    eeg.push_back(&t.eeg);
  }
  column_stats(clean, scaler.mfcc_mean, scaler.mfcc_std);
  column_stats(eeg, scaler.eeg_mean, scaler.eeg_std);
  return scaler;
}

void FeatureScaler::apply(TrainingSet& data) const {
  for (TrainingTriple& t : data.items) {
    t.noisy_mfcc = standardize_mfcc(t.noisy_mfcc);
    t.clean_mfcc = standardize_mfcc(t.clean_mfcc);
    t.eeg = standardize_eeg(t.eeg);
  }
}

Matrix FeatureScaler::standardize_mfcc(const Matrix& m) const {
  return affine_columns(m, mfcc_mean, mfcc_std, true);
}

Matrix FeatureScaler::standardize_eeg(const Matrix& m) const {
  return affine_columns(m, eeg_mean, eeg_std, true);
}

Matrix FeatureScaler::restore_mfcc(const Matrix& m) const {
  return affine_columns(m, mfcc_mean, mfcc_std, false);
}

std::vector<LstmEpochStats> train_lstm_regression(LstmRegressionModel& model,
                                                  neural::AdamState& adam,
                                                  const TrainingSet& data,
                                                  const TrainConfig& config, int start_epoch,
                                                  const EpochCallback& on_epoch) {
  validate(config);
  validate(data);
  if (model.mfcc_dim() != data.mfcc_dim || model.eeg_dim() != data.eeg_dim) {
    throw std::invalid_argument("train_lstm_regression: model/data width mismatch");
  }

  const auto segments = make_segments(data, static_cast<std::size_t>(config.sequence_length));
  if (segments.empty()) throw std::invalid_argument("train_lstm_regression: no segments");
  const auto params = model.params();
  std::ofstream log = open_log(config.loss_log_path);
  if (log.is_open() && start_epoch == 0) log << "epoch,loss\n";

  std::vector<LstmEpochStats> history;
  std::vector<std::size_t> order(segments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::vector<Segment> shuffled(segments.size());
  for (int epoch = start_epoch; epoch < config.epochs; ++epoch) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(epoch)));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (std::size_t i = 0; i < order.size(); ++i) shuffled[i] = segments[order[i]];

    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t first = 0; first < shuffled.size();
         first += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t count =
          std::min(static_cast<std::size_t>(config.batch_size), shuffled.size() - first);
      Batch batch = pack_batch(data, shuffled, first, count,
                               static_cast<std::size_t>(config.sequence_length), true);

      LstmRegressionModel::Cache cache;
      const neural::Tensor3 pred = model.forward(batch.joint, &cache);
      const neural::LossResult loss =
          neural::mse_loss_masked(pred, batch.clean, batch.lengths);
      if (!std::isfinite(loss.value)) {
        throw std::runtime_error("train_lstm_regression: non-finite loss at epoch " +
                                 std::to_string(epoch) + ", batch " + std::to_string(batches));
      }
      model.zero_grads();
      model.backward(cache, loss.grad);
      clip_gradients(params, config.grad_clip);
      adam.step(params);
      loss_sum += loss.value;
      ++batches;
    }

    LstmEpochStats stats;
    stats.epoch = epoch;
    stats.mean_loss = loss_sum / static_cast<double>(batches);
    history.push_back(stats);
    if (log.is_open()) log << epoch << ',' << stats.mean_loss << '\n';
    if (on_epoch) on_epoch(epoch);
  }
  return history;
}

std::vector<GanEpochStats> train_gan(Generator& generator, Discriminator& discriminator,
                                     neural::AdamState& adam_g, neural::AdamState& adam_d,
                                     const TrainingSet& data, const TrainConfig& config,
                                     int start_epoch, const EpochCallback& on_epoch) {
  validate(config);
  validate(data);
  if (generator.mfcc_dim() != data.mfcc_dim || generator.eeg_dim() != data.eeg_dim ||
      discriminator.mfcc_dim() != data.mfcc_dim || discriminator.eeg_dim() != data.eeg_dim) {
    throw std::invalid_argument("train_gan: model/data width mismatch");
  }

  const auto segments = make_segments(data, static_cast<std::size_t>(config.sequence_length));
  if (segments.empty()) throw std::invalid_argument("train_gan: no segments");
  const auto params_g = generator.params();
  const auto params_d = discriminator.params();
  std::ofstream log = open_log(config.loss_log_path);
  if (log.is_open() && start_epoch == 0) {
    log << "epoch,batch,loss_g,loss_d,p_fake_mean,p_clean_mean,p_noisy_mean\n";
  }

  std::vector<GanEpochStats> history;
  std::vector<std::size_t> order(segments.size());
  std::vector<Segment> shuffled(segments.size());
  int saturated_batches = 0;
  bool saturation_reported = false;

  for (int epoch = start_epoch; epoch < config.epochs; ++epoch) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(epoch)));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (std::size_t i = 0; i < order.size(); ++i) shuffled[i] = segments[order[i]];

    GanEpochStats stats;
    stats.epoch = epoch;
    std::size_t batches = 0;
    for (std::size_t first = 0; first < shuffled.size();
         first += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t count =
          std::min(static_cast<std::size_t>(config.batch_size), shuffled.size() - first);
      Batch batch = pack_batch(data, shuffled, first, count,
                               static_cast<std::size_t>(config.sequence_length), false);
      const double inv_count = 1.0 / static_cast<double>(count);

      // --- Discriminator step over the three pair kinds. The generator's
      // output is treated as a constant here (no gradient flows back).
      const neural::Tensor3 fake = generator.forward(batch.noisy, batch.eeg);

      discriminator.zero_grads();
      Discriminator::Cache cache_f, cache_c, cache_n;
      const auto p_fake = discriminator.forward(fake, batch.eeg, batch.lengths, &cache_f);
      const auto p_clean =
          discriminator.forward(batch.clean, batch.eeg, batch.lengths, &cache_c);
      const auto p_noisy =
          discriminator.forward(batch.noisy, batch.eeg, batch.lengths, &cache_n);

      double loss_d = 0.0;
      double pf_mean = 0.0, pc_mean = 0.0, pn_mean = 0.0;
      std::vector<double> grad_f(count), grad_c(count), grad_n(count);
      for (std::size_t b = 0; b < count; ++b) {
        const auto [lg_unused, ld] = gan_losses(p_fake[b], p_clean[b], p_noisy[b]);
        (void)lg_unused;
        loss_d += ld * inv_count;
        pf_mean += p_fake[b] * inv_count;
        pc_mean += p_clean[b] * inv_count;
        pn_mean += p_noisy[b] * inv_count;
        // d/dP of the mean-per-term discriminator loss.
        grad_f[b] = inv_count / (1.0 - p_fake[b]);
        grad_n[b] = inv_count / (1.0 - p_noisy[b]);
        grad_c[b] = -inv_count / p_clean[b];
      }
      discriminator.backward(cache_f, grad_f);
      discriminator.backward(cache_c, grad_c);
      discriminator.backward(cache_n, grad_n);
      clip_gradients(params_d, config.grad_clip);
      adam_d.step(params_d);

      // --- Generator step through the frozen discriminator.
      generator.zero_grads();
      Generator::Cache cache_g;
      const neural::Tensor3 fake2 = generator.forward(batch.noisy, batch.eeg, &cache_g);
      Discriminator::Cache cache_gf;
      const auto p_fake2 = discriminator.forward(fake2, batch.eeg, batch.lengths, &cache_gf);
      double loss_g = 0.0;
      std::vector<double> grad_pf(count);
      for (std::size_t b = 0; b < count; ++b) {
        loss_g += -std::log(std::max(p_fake2[b], 1e-12)) * inv_count;
        grad_pf[b] = -inv_count / p_fake2[b];
      }
      discriminator.zero_grads();  // scratch; D stays frozen for this step
      auto [d_fake, d_eeg_unused] = discriminator.backward(cache_gf, grad_pf);
      (void)d_eeg_unused;
      generator.backward(cache_g, d_fake);
      clip_gradients(params_g, config.grad_clip);
      adam_g.step(params_g);

      if (!std::isfinite(loss_d) || !std::isfinite(loss_g)) {
        throw std::runtime_error("train_gan: non-finite loss at epoch " +
                                 std::to_string(epoch) + ", batch " + std::to_string(batches));
      }

      if (log.is_open()) {
        log << epoch << ',' << batches << ',' << loss_g << ',' << loss_d << ',' << pf_mean
            << ',' << pc_mean << ',' << pn_mean << '\n';
      }

      // Saturation watch: a discriminator that is never fooled starves the
      // generator of gradient.
      if (pf_mean < 1e-6) {
        if (++saturated_batches >= 50 && !saturation_reported) {
          if (log.is_open()) {
            log << "# warning: discriminator saturated (mean P_fake < 1e-6) for 50 "
                   "consecutive batches\n";
          }
          saturation_reported = true;
        }
      } else {
        saturated_batches = 0;
        saturation_reported = false;
      }

      stats.mean_loss_g += loss_g;
      stats.mean_loss_d += loss_d;
      stats.mean_p_fake += pf_mean;
      stats.mean_p_clean += pc_mean;
      stats.mean_p_noisy += pn_mean;
      ++batches;
    }

    const double inv_batches = 1.0 / static_cast<double>(batches);
    stats.mean_loss_g *= inv_batches;
    stats.mean_loss_d *= inv_batches;
    stats.mean_p_fake *= inv_batches;
    stats.mean_p_clean *= inv_batches;
    stats.mean_p_noisy *= inv_batches;
    history.push_back(stats);
    if (on_epoch) on_epoch(epoch);
  }
  return history;
}

namespace {

neural::Tensor3 matrix_as_batch1(const Matrix& m) {
  neural::Tensor3 t(1, m.rows(), m.cols());
  std::copy(m.data(), m.data() + m.size(), t.values.begin());
  return t;
}

Matrix tensor_to_matrix(const neural::Tensor3& t) {
  Matrix m(t.time, t.features);
  std::copy(t.values.begin(), t.values.end(), m.data());
  return m;
}

void check_enhance_inputs(std::size_t model_mfcc, std::size_t model_eeg, const Matrix& mfcc,
                          const Matrix& eeg) {
  if (mfcc.rows() != eeg.rows()) {
    throw std::invalid_argument("enhance: cepstral/neural frame counts differ");
  }
  if (mfcc.rows() == 0) throw std::invalid_argument("enhance: empty input");
  if (mfcc.cols() != model_mfcc || eeg.cols() != model_eeg) {
    throw std::invalid_argument("enhance: feature width mismatch");
  }
}

}  // namespace

Matrix enhance(const LstmRegressionModel& model, const Matrix& mfcc, const Matrix& eeg) {
  check_enhance_inputs(model.mfcc_dim(), model.eeg_dim(), mfcc, eeg);
  neural::Tensor3 joint(1, mfcc.rows(), mfcc.cols() + eeg.cols());
  for (std::size_t t = 0; t < mfcc.rows(); ++t) {
    const auto rm = mfcc.row(t);
    const auto re = eeg.row(t);
    const auto out = joint.frame(0, t);
    std::copy(rm.begin(), rm.end(), out.begin());
    std::copy(re.begin(), re.end(), out.begin() + static_cast<std::ptrdiff_t>(mfcc.cols()));
  }
  return tensor_to_matrix(model.forward(joint));
}

Matrix enhance(const Generator& model, const Matrix& mfcc, const Matrix& eeg) {
  check_enhance_inputs(model.mfcc_dim(), model.eeg_dim(), mfcc, eeg);
  return tensor_to_matrix(
      model.forward(matrix_as_batch1(mfcc), matrix_as_batch1(eeg)));
}

}  // namespace neurovox::models
