// tests/unit/griffin_lim_test.cc

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
#include <numbers>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"
#include "neurovox/dsp/iir.h"
#include "neurovox/dsp/stft.h"

namespace {

using neurovox::Rng;
using neurovox::dsp::griffin_lim;
using neurovox::dsp::griffin_lim_with_trace;
using neurovox::dsp::Spectrogram;
using neurovox::dsp::stft;
using neurovox::dsp::Waveform;

Waveform tone(double freq_hz, std::size_t len) {
  Waveform w;
  w.sample_rate_hz = 16000;
  w.samples.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    w.samples[i] =
        0.5 * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / 16000.0);
  }
  return w;
}

// Speech-shaped noise: broadband excitation through a formant-ish bandpass.
Waveform speech_like(std::uint64_t seed) {
  Rng rng(seed);
  Waveform w;
  w.sample_rate_hz = 16000;
  w.samples.resize(12000);
  for (auto& v : w.samples) v = rng.gaussian();
  neurovox::dsp::IirFilterSpec spec;
  spec.kind = neurovox::dsp::FilterKind::kBandpass;
  spec.order = 2;
  spec.cutoffs_hz = {200.0, 3400.0};
  spec.sample_rate_hz = 16000;
  return filter_apply(design_iir(spec), w);
}

}  // namespace

TEST_SUITE("griffin_lim") {

TEST_CASE("60 iterations cut the error of a 440 Hz target by 5x") {
  const Spectrogram s = stft(tone(440.0, 16000), 400, 160, 512);
  const auto result = griffin_lim_with_trace(s, 60);
  REQUIRE(result.convergence.size() == 60);
  CHECK(result.convergence[59] <= 0.2 * result.convergence[0]);
  CHECK(result.waveform.sample_rate_hz == 16000);
  CHECK(result.waveform.samples.size() == (s.frames() - 1) * 160 + 400);
}

TEST_CASE("all-zero spectrogram reconstructs to digital silence") {
  Spectrogram s;
  s.magnitudes = neurovox::Matrix(12, 257, 0.0);
  s.hop_samples = 160;
  s.window_samples = 400;
  s.fft_size = 512;
  s.sample_rate_hz = 16000;
  const Waveform w = griffin_lim(s, 10);
  REQUIRE(w.samples.size() == 11 * 160 + 400);
  for (double v : w.samples) CHECK(v == 0.0);
}

TEST_CASE("error is monotone non-increasing on real-waveform targets") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Spectrogram s = stft(speech_like(seed), 400, 160, 512);
    const auto result = griffin_lim_with_trace(s, 40);
    for (std::size_t k = 1; k < result.convergence.size(); ++k) {
      CHECK(result.convergence[k] <= result.convergence[k - 1] + 1e-7);
    }
    CHECK(result.convergence.back() <= result.convergence.front());
  }
}

TEST_CASE("iteration count below one is rejected") {
  const Spectrogram s = stft(tone(440.0, 8000), 400, 160, 512);
  CHECK_THROWS_AS(griffin_lim(s, 0), std::invalid_argument);
}

}  // TEST_SUITE
