// core/src/dsp/griffin_lim.cc

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

#include "neurovox/dsp/griffin_lim.h"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace neurovox::dsp {
namespace {

void check_target(const Spectrogram& s) {
  if (s.bins() != s.fft_size / 2 + 1) {
    throw std::invalid_argument("griffin_lim: bins != fft_size/2 + 1");
  }
  if (s.sample_rate_hz <= 0 || s.hop_samples == 0 || s.window_samples == 0) {
    throw std::invalid_argument("griffin_lim: invalid spectrogram geometry");
  }
  for (std::size_t i = 0; i < s.magnitudes.size(); ++i) {
    const double v = s.magnitudes.data()[i];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("griffin_lim: magnitudes must be finite and >= 0");
    }
  }
}

double frobenius(const Matrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += m.data()[i] * m.data()[i];
  return std::sqrt(acc);
}

}  // namespace

GriffinLimResult griffin_lim_with_trace(const Spectrogram& target, int iterations) {
  if (iterations < 1) throw std::invalid_argument("griffin_lim: iterations must be >= 1");
  check_target(target);

  GriffinLimResult result;
  result.waveform.sample_rate_hz = target.sample_rate_hz;
  const std::size_t out_len =
      target.frames() == 0
          ? 0
          : (target.frames() - 1) * target.hop_samples + target.window_samples;

  const double target_norm = frobenius(target.magnitudes);
  if (target_norm == 0.0) {
    result.waveform.samples.assign(out_len, 0.0);
    result.convergence.assign(static_cast<std::size_t>(iterations), 0.0);
    return result;
  }

  ComplexSpectrogram est;
  est.frames = target.frames();
  est.bins = target.bins();
  est.values.resize(est.frames * est.bins);
  // Zero phase start: the spectrum is the target magnitude itself.
  for (std::size_t f = 0; f < est.frames; ++f) {
    for (std::size_t b = 0; b < est.bins; ++b) est.at(f, b) = {target.magnitudes(f, b), 0.0};
  }

  std::vector<double> x =
      istft(est, target.window_samples, target.hop_samples, target.fft_size);

  result.convergence.reserve(static_cast<std::size_t>(iterations));
  for (int it = 0; it < iterations; ++it) {
    ComplexSpectrogram c =
        stft_complex(x, target.window_samples, target.hop_samples, target.fft_size);
    double err2 = 0.0;
    for (std::size_t f = 0; f < c.frames; ++f) {
      for (std::size_t b = 0; b < c.bins; ++b) {
        const double mag = std::abs(c.at(f, b));
        const double d = mag - target.magnitudes(f, b);
        err2 += d * d;
        // Keep the measured phase, impose the target magnitude.
        c.at(f, b) = mag > 0.0 ? c.at(f, b) / mag * target.magnitudes(f, b)
                               : std::complex<double>{target.magnitudes(f, b), 0.0};
      }
    }
    result.convergence.push_back(std::sqrt(err2) / target_norm);
    x = istft(c, target.window_samples, target.hop_samples, target.fft_size);
  }

  result.waveform.samples = std::move(x);
  return result;
}

Waveform griffin_lim(const Spectrogram& target, int iterations) {
  return griffin_lim_with_trace(target, iterations).waveform;
}

}  // namespace neurovox::dsp
