// tests/unit/mfcc_test.cc

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

#include "neurovox/dsp/mfcc.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"
#include "neurovox/dsp/mel.h"
#include "neurovox/dsp/stft.h"

namespace {

using neurovox::Matrix;
using neurovox::Rng;
using neurovox::dsp::MelFilterbank;
using neurovox::dsp::mfcc;
using neurovox::dsp::mfcc_invert;
using neurovox::dsp::MfccParams;
using neurovox::dsp::MfccSequence;
using neurovox::dsp::Waveform;

Waveform silence_1s() {
  Waveform w;
  w.sample_rate_hz = 16000;
  w.samples.assign(16000, 0.0);
  return w;
}

// Straight-line reference front end: naive DFT, textbook triangles, direct
// DCT sums. Deliberately independent of the library implementation path.
std::vector<std::vector<double>> reference_mfcc(const Waveform& x) {
  const std::size_t window = 400, hop = 160, fft = 512, n_mels = 26, n_coeffs = 13;
  const std::size_t frames = (x.samples.size() - window) / hop + 1;
  const std::size_t bins = fft / 2 + 1;

  std::vector<double> win(window);
  for (std::size_t i = 0; i < window; ++i) {
    win[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / static_cast<double>(window));
  }

  auto hz2mel = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  auto mel2hz = [](double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); };
  std::vector<double> corners(n_mels + 2);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    corners[i] = mel2hz(hz2mel(8000.0) * static_cast<double>(i) / (n_mels + 1));
  }

  std::vector<std::vector<double>> out(frames, std::vector<double>(n_coeffs, 0.0));
  for (std::size_t f = 0; f < frames; ++f) {
    std::vector<double> mag(bins, 0.0);
    for (std::size_t k = 0; k < bins; ++k) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t i = 0; i < window; ++i) {
        const double ang = -2.0 * std::numbers::pi * static_cast<double>(k * i) / fft;
        acc += x.samples[f * hop + i] * win[i] *
               std::complex<double>{std::cos(ang), std::sin(ang)};
      }
      mag[k] = std::abs(acc);
    }
    std::vector<double> logmel(n_mels);
    for (std::size_t m = 0; m < n_mels; ++m) {
      double e = 0.0;
      for (std::size_t k = 0; k < bins; ++k) {
        const double freq = static_cast<double>(k) * 16000.0 / fft;
        double w = 0.0;
        if (freq > corners[m] && freq < corners[m + 2]) {
          w = freq <= corners[m + 1]
                  ? (freq - corners[m]) / (corners[m + 1] - corners[m])
                  : (corners[m + 2] - freq) / (corners[m + 2] - corners[m + 1]);
        }
        e += w * mag[k];
      }
      logmel[m] = std::log(std::max(e, 1e-10));
    }
    for (std::size_t k = 0; k < n_coeffs; ++k) {
      const double scale = k == 0 ? std::sqrt(1.0 / n_mels) : std::sqrt(2.0 / n_mels);
      double acc = 0.0;
      for (std::size_t m = 0; m < n_mels; ++m) {
        acc += scale * std::cos(std::numbers::pi * (m + 0.5) * k / n_mels) * logmel[m];
      }
      out[f][k] = acc;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("mfcc") {

TEST_CASE("digital silence: identical frames, energy confined to c0") {
  const MfccSequence m = mfcc(silence_1s());
  REQUIRE(m.frames() == 98);
  REQUIRE(m.coeffs.cols() == 13);
  CHECK(m.frame_rate_hz == 100);

  const double expected_c0 = std::sqrt(26.0) * std::log(1e-10);
  for (std::size_t f = 0; f < m.frames(); ++f) {
    CHECK(m.coeffs(f, 0) == doctest::Approx(expected_c0).epsilon(1e-12));
    for (std::size_t k = 1; k < 13; ++k) CHECK(std::abs(m.coeffs(f, k)) < 1e-9);
    for (std::size_t k = 0; k < 13; ++k) CHECK(m.coeffs(f, k) == m.coeffs(0, k));
  }
}

TEST_CASE("one second at 16 kHz yields 98 frames at exactly 100 Hz") {
  Rng rng(21);
  Waveform w = silence_1s();
  for (auto& v : w.samples) v = 0.1 * rng.gaussian();
  const MfccSequence m = mfcc(w);
  CHECK(m.frames() == 98);
  CHECK(m.frame_rate_hz == 100);
}

TEST_CASE("wrong sample rate is rejected, no implicit resampling") {
  Waveform w;
  w.sample_rate_hz = 8000;
  w.samples.assign(8000, 0.0);
  CHECK_THROWS_AS(mfcc(w), std::invalid_argument);
}

TEST_CASE("white noise matches the independent reference front end") {
  Rng rng(77);
  Waveform w;
  w.sample_rate_hz = 16000;
  w.samples.resize(4000);
  for (auto& v : w.samples) v = 0.3 * rng.gaussian();

  const MfccSequence got = mfcc(w);
  const auto want = reference_mfcc(w);
  REQUIRE(got.frames() == want.size());
  for (std::size_t f = 0; f < got.frames(); ++f) {
    for (std::size_t k = 0; k < 13; ++k) {
      CHECK(got.coeffs(f, k) == doctest::Approx(want[f][k]).epsilon(1e-7));
    }
  }

  // c0 varies across frames and higher coefficients shrink on average.
  double c0_mean = 0.0;
  for (std::size_t f = 0; f < got.frames(); ++f) c0_mean += got.coeffs(f, 0);
  c0_mean /= static_cast<double>(got.frames());
  double c0_var = 0.0, low = 0.0, high = 0.0;
  for (std::size_t f = 0; f < got.frames(); ++f) {
    c0_var += (got.coeffs(f, 0) - c0_mean) * (got.coeffs(f, 0) - c0_mean);
    for (std::size_t k = 1; k <= 4; ++k) low += std::abs(got.coeffs(f, k));
    for (std::size_t k = 9; k <= 12; ++k) high += std::abs(got.coeffs(f, k));
  }
  CHECK(c0_var > 0.0);
  CHECK(low > high);
}

TEST_CASE("determinism: identical input gives bit-identical output") {
  Rng rng(5);
  Waveform w = silence_1s();
  for (auto& v : w.samples) v = rng.gaussian();
  const MfccSequence a = mfcc(w);
  const MfccSequence b = mfcc(w);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    CHECK(a.coeffs.data()[i] == b.coeffs.data()[i]);
  }
}

TEST_CASE("inversion of an all-zero frame is the flat-mel reconstruction") {
  MfccSequence zero;
  zero.coeffs = Matrix(1, 13, 0.0);
  const auto spec = mfcc_invert(zero);

  const MelFilterbank bank(26, 512, 16000, 0.0, 8000.0);
  const std::vector<double> ones(26, 1.0);  // exp(inverse-DCT of 0) is all ones
  const auto expected = bank.pseudo_inverse_apply(ones);
  REQUIRE(spec.bins() == expected.size());
  for (std::size_t b = 0; b < expected.size(); ++b) {
    CHECK(spec.magnitudes(0, b) == doctest::Approx(expected[b]).epsilon(1e-12));
  }
}

TEST_CASE("a lone c0 scales the flat spectrum by exp of the energy") {
  MfccSequence zero, c0_only;
  zero.coeffs = Matrix(1, 13, 0.0);
  c0_only.coeffs = Matrix(1, 13, 0.0);
  c0_only.coeffs(0, 0) = 3.25;
  const auto base = mfcc_invert(zero);
  const auto scaled = mfcc_invert(c0_only);
  const double gain = std::exp(3.25 / std::sqrt(26.0));
  for (std::size_t b = 0; b < base.bins(); ++b) {
    CHECK(scaled.magnitudes(0, b) ==
          doctest::Approx(base.magnitudes(0, b) * gain).epsilon(1e-10));
  }
}

TEST_CASE("vowel round trip keeps per-frame spectral shape (cosine >= 0.9)") {
  // 100 Hz fundamental with formant-shaped harmonics out to the band edge.
  Waveform x;
  x.sample_rate_hz = 16000;
  x.samples.resize(16000);
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    const double t = static_cast<double>(i) / 16000.0;
    double s = 0.0;
    for (int h = 1; h * 100.0 < 7600.0; ++h) {
      const double fh = h * 100.0;
      const double env = std::exp(-std::pow((fh - 600.0) / 400.0, 2)) +
                         0.5 * std::exp(-std::pow((fh - 1300.0) / 500.0, 2)) +
                         0.15 * std::exp(-fh / 2500.0);
      s += env * std::sin(2.0 * std::numbers::pi * fh * t) / std::pow(h, 0.3);
    }
    x.samples[i] = 0.05 * s;
  }
  const auto ref = neurovox::dsp::stft(x, 400, 160, 512);
  const auto inv = mfcc_invert(mfcc(x));
  REQUIRE(inv.frames() == ref.frames());

  std::vector<double> energy(ref.frames(), 0.0);
  double peak = 0.0;
  for (std::size_t f = 0; f < ref.frames(); ++f) {
    for (std::size_t b = 0; b < ref.bins(); ++b) {
      energy[f] += ref.magnitudes(f, b) * ref.magnitudes(f, b);
    }
    peak = std::max(peak, energy[f]);
  }
  for (std::size_t f = 0; f < ref.frames(); ++f) {
    if (energy[f] < 0.1 * peak) continue;  // voiced frames only
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t b = 0; b < ref.bins(); ++b) {
      dot += ref.magnitudes(f, b) * inv.magnitudes(f, b);
      na += ref.magnitudes(f, b) * ref.magnitudes(f, b);
      nb += inv.magnitudes(f, b) * inv.magnitudes(f, b);
    }
    CHECK(dot / (std::sqrt(na * nb) + 1e-30) >= 0.9);
  }
}

}  // TEST_SUITE
