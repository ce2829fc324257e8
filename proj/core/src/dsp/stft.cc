// core/src/dsp/stft.cc

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

#include "neurovox/dsp/stft.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "neurovox/dsp/fft.h"

namespace neurovox::dsp {
namespace {

void check_params(std::size_t window, std::size_t hop, std::size_t fft_size) {
  if (window == 0 || fft_size == 0) {
    throw std::invalid_argument("stft: window and fft_size must be positive");
  }
  if (hop < 1) throw std::invalid_argument("stft: hop must be >= 1");
  if (window > fft_size) {
    throw std::invalid_argument("stft: window_samples must not exceed fft_size");
  }
}

}  // namespace

std::vector<double> hann_window(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(n));
  }
  return w;
}

std::size_t stft_frame_count(std::size_t len, std::size_t window, std::size_t hop) {
  if (len < window) {
    throw std::invalid_argument("stft: signal shorter than one window (empty spectrogram)");
  }
  return (len - window) / hop + 1;
}

ComplexSpectrogram stft_complex(std::span<const double> x, std::size_t window_samples,
                                std::size_t hop_samples, std::size_t fft_size) {
  check_params(window_samples, hop_samples, fft_size);
  const std::size_t n_frames = stft_frame_count(x.size(), window_samples, hop_samples);
  const std::vector<double> win = hann_window(window_samples);

  ComplexSpectrogram out;
  out.frames = n_frames;
  out.bins = fft_size / 2 + 1;
  out.values.resize(n_frames * out.bins);

  std::vector<double> frame(window_samples);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t start = f * hop_samples;
    for (std::size_t i = 0; i < window_samples; ++i) frame[i] = x[start + i] * win[i];
    const auto bins = rfft(frame, fft_size);
    for (std::size_t b = 0; b < out.bins; ++b) out.at(f, b) = bins[b];
  }
  return out;
}

Spectrogram stft(const Waveform& x, std::size_t window_samples, std::size_t hop_samples,
                 std::size_t fft_size) {
  validate(x, "stft");
  const ComplexSpectrogram c = stft_complex(x.samples, window_samples, hop_samples, fft_size);
  Spectrogram s;
  s.magnitudes = Matrix(c.frames, c.bins);
  for (std::size_t f = 0; f < c.frames; ++f) {
    for (std::size_t b = 0; b < c.bins; ++b) s.magnitudes(f, b) = std::abs(c.at(f, b));
  }
  s.hop_samples = hop_samples;
  s.window_samples = window_samples;
  s.fft_size = fft_size;
  s.sample_rate_hz = x.sample_rate_hz;
  return s;
}

std::vector<double> istft(const ComplexSpectrogram& s, std::size_t window_samples,
                          std::size_t hop_samples, std::size_t fft_size) {
  check_params(window_samples, hop_samples, fft_size);
  if (s.bins != fft_size / 2 + 1) {
    throw std::invalid_argument("istft: bin count does not match fft_size");
  }
  if (s.frames == 0) return {};

  const std::vector<double> win = hann_window(window_samples);
  const std::size_t out_len = (s.frames - 1) * hop_samples + window_samples;
  std::vector<double> acc(out_len, 0.0);
  std::vector<double> norm(out_len, 0.0);

  std::vector<std::complex<double>> full(fft_size);
  for (std::size_t f = 0; f < s.frames; ++f) {
    // Rebuild the full Hermitian spectrum and invert.
    for (std::size_t b = 0; b < s.bins; ++b) full[b] = s.at(f, b);
    for (std::size_t b = s.bins; b < fft_size; ++b) full[b] = std::conj(full[fft_size - b]);
    ifft(full);
    const std::size_t start = f * hop_samples;
    for (std::size_t i = 0; i < window_samples; ++i) {
      acc[start + i] += win[i] * full[i].real();
      norm[start + i] += win[i] * win[i];
    }
  }
  // Hop 160 against window 400 is not constant-overlap-add, so the explicit
  // window-energy normalization matters.
  for (std::size_t i = 0; i < out_len; ++i) {
    acc[i] = norm[i] > 1e-12 ? acc[i] / norm[i] : 0.0;
  }
  return acc;
}

}  // namespace neurovox::dsp
