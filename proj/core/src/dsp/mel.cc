// core/src/dsp/mel.cc

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

#include "neurovox/dsp/mel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace neurovox::dsp {

double MelFilterbank::hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelFilterbank::mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank::MelFilterbank(std::size_t n_mels, std::size_t fft_size, int sample_rate_hz,
                             double f_lo_hz, double f_hi_hz) {
  if (n_mels == 0 || fft_size == 0 || sample_rate_hz <= 0) {
    throw std::invalid_argument("MelFilterbank: invalid geometry");
  }
  if (!(f_lo_hz >= 0.0) || !(f_hi_hz > f_lo_hz) || f_hi_hz > sample_rate_hz / 2.0) {
    throw std::invalid_argument("MelFilterbank: invalid band edges");
  }
  const std::size_t bins = fft_size / 2 + 1;
  weights_ = Matrix(n_mels, bins);

  // n_mels + 2 corner points, evenly spaced in mel.
  std::vector<double> corners(n_mels + 2);
  const double mel_lo = hz_to_mel(f_lo_hz);
  const double mel_hi = hz_to_mel(f_hi_hz);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    corners[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                        static_cast<double>(n_mels + 1));
  }

  // Triangles evaluated at exact bin frequencies; continuous corners keep the
  // filterbank well conditioned for the pseudo-inverse.
  for (std::size_t m = 0; m < n_mels; ++m) {
    const double left = corners[m];
    const double center = corners[m + 1];
    const double right = corners[m + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate_hz / static_cast<double>(fft_size);
      double w = 0.0;
      if (f > left && f < right) {
        w = f <= center ? (f - left) / (center - left) : (right - f) / (right - center);
      }
      weights_(m, k) = w;
    }
  }

  using Emat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const Emat> w(weights_.data(), static_cast<Eigen::Index>(n_mels),
                           static_cast<Eigen::Index>(bins));
  Emat pinv = w.completeOrthogonalDecomposition().pseudoInverse();
  pinv_ = Matrix(bins, n_mels);
  for (std::size_t r = 0; r < bins; ++r) {
    for (std::size_t c = 0; c < n_mels; ++c) {
      pinv_(r, c) = pinv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
}

std::vector<double> MelFilterbank::apply(std::span<const double> magnitude_bins) const {
  if (magnitude_bins.size() != n_bins()) {
    throw std::invalid_argument("MelFilterbank::apply: bin count mismatch");
  }
  std::vector<double> out(n_mels(), 0.0);
  for (std::size_t m = 0; m < n_mels(); ++m) {
    double acc = 0.0;
    const auto row = weights_.row(m);
    for (std::size_t k = 0; k < row.size(); ++k) acc += row[k] * magnitude_bins[k];
    out[m] = acc;
  }
  return out;
}

std::vector<double> MelFilterbank::pseudo_inverse_apply(
    std::span<const double> mel_energies) const {
  if (mel_energies.size() != n_mels()) {
    throw std::invalid_argument("MelFilterbank::pseudo_inverse_apply: mel count mismatch");
  }
  std::vector<double> out(n_bins(), 0.0);
  for (std::size_t k = 0; k < n_bins(); ++k) {
    double acc = 0.0;
    const auto row = pinv_.row(k);
    for (std::size_t m = 0; m < row.size(); ++m) acc += row[m] * mel_energies[m];
    out[k] = std::max(acc, 0.0);
  }
  return out;
}

}  // namespace neurovox::dsp
