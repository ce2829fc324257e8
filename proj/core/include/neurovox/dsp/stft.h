// core/include/neurovox/dsp/stft.h

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

#ifndef NEUROVOX_DSP_STFT_H_
#define NEUROVOX_DSP_STFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "neurovox/common/matrix.h"
#include "neurovox/dsp/waveform.h"

namespace neurovox::dsp {

// Magnitude spectrogram from Hann-windowed frames.
// frames x bins with bins == fft_size/2 + 1.
struct Spectrogram {
  Matrix magnitudes;
  std::size_t hop_samples = 0;
  std::size_t window_samples = 0;
  std::size_t fft_size = 0;
  int sample_rate_hz = 0;

  std::size_t frames() const { return magnitudes.rows(); }
  std::size_t bins() const { return magnitudes.cols(); }
};

// Complex STFT, kept for the phase-sensitive paths (inversion, tests).
struct ComplexSpectrogram {
  std::vector<std::complex<double>> values;  // row-major frames x bins
  std::size_t frames = 0;
  std::size_t bins = 0;

  std::complex<double>& at(std::size_t f, std::size_t b) { return values[f * bins + b]; }
  const std::complex<double>& at(std::size_t f, std::size_t b) const {
    return values[f * bins + b];
  }
};

// Periodic Hann window of length n.
std::vector<double> hann_window(std::size_t n);

// Frame count is floor((len - window)/hop) + 1; a signal shorter than one
// window is an error (the spectrogram would be empty).
std::size_t stft_frame_count(std::size_t len, std::size_t window, std::size_t hop);

Spectrogram stft(const Waveform& x, std::size_t window_samples, std::size_t hop_samples,
                 std::size_t fft_size);

ComplexSpectrogram stft_complex(std::span<const double> x, std::size_t window_samples,
                                std::size_t hop_samples, std::size_t fft_size);

// Least-squares inverse: weighted overlap-add with Hann synthesis windows and
// sum-of-squared-window normalization. Output length (frames-1)*hop + window.
std::vector<double> istft(const ComplexSpectrogram& s, std::size_t window_samples,
                          std::size_t hop_samples, std::size_t fft_size);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_STFT_H_
