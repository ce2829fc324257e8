// core/include/neurovox/dsp/mel.h

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

#ifndef NEUROVOX_DSP_MEL_H_
#define NEUROVOX_DSP_MEL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "neurovox/common/matrix.h"

namespace neurovox::dsp {

// Triangular mel filterbank on the HTK mel scale, with a precomputed
// pseudo-inverse for mapping mel energies back to linear magnitude bins.
class MelFilterbank {
 public:
  MelFilterbank(std::size_t n_mels, std::size_t fft_size, int sample_rate_hz,
                double f_lo_hz, double f_hi_hz);

  static double hz_to_mel(double hz);
  static double mel_to_hz(double mel);

  std::size_t n_mels() const { return weights_.rows(); }
  std::size_t n_bins() const { return weights_.cols(); }
  const Matrix& weights() const { return weights_; }

  // magnitude bins (fft_size/2+1) -> mel energies (n_mels)
  std::vector<double> apply(std::span<const double> magnitude_bins) const;

  // mel energies -> linear magnitude bins via the Moore-Penrose
  // pseudo-inverse, negatives clamped to zero.
  std::vector<double> pseudo_inverse_apply(std::span<const double> mel_energies) const;

 private:
  Matrix weights_;  // n_mels x bins
  Matrix pinv_;     // bins x n_mels
};

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_MEL_H_
