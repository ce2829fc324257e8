// core/src/metrics/spectral.cc

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

#include "neurovox/metrics/spectral.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "neurovox/dsp/stft.h"

namespace neurovox::metrics {

double spectral_convergence(const dsp::Waveform& ref, const dsp::Waveform& est) {
  dsp::validate(ref, "spectral_convergence(ref)");
  dsp::validate(est, "spectral_convergence(est)");
  if (ref.sample_rate_hz != est.sample_rate_hz) {
    throw std::invalid_argument("spectral_convergence: sample-rate mismatch");
  }
  const std::size_t len = std::min(ref.samples.size(), est.samples.size());
  dsp::Waveform a{std::vector<double>(ref.samples.begin(), ref.samples.begin() + len),
                  ref.sample_rate_hz};
  dsp::Waveform b{std::vector<double>(est.samples.begin(), est.samples.begin() + len),
                  est.sample_rate_hz};

  const std::size_t window = 400, hop = 160, fft = 512;
  const dsp::Spectrogram sa = dsp::stft(a, window, hop, fft);
  const dsp::Spectrogram sb = dsp::stft(b, window, hop, fft);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < sa.magnitudes.size(); ++i) {
    const double d = sb.magnitudes.data()[i] - sa.magnitudes.data()[i];
    num += d * d;
    den += sa.magnitudes.data()[i] * sa.magnitudes.data()[i];
  }
  if (den == 0.0) {
    throw std::invalid_argument("spectral_convergence: reference has zero energy");
  }
  return std::sqrt(num) / std::sqrt(den);
}

}  // namespace neurovox::metrics
