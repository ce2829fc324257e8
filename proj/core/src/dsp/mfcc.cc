// core/src/dsp/mfcc.cc

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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "neurovox/dsp/mel.h"

namespace neurovox::dsp {
namespace {

// Orthonormal DCT-II basis, n_coeffs x n_mels.
Matrix dct_basis(std::size_t n_coeffs, std::size_t n_mels) {
  Matrix d(n_coeffs, n_mels);
  const double n = static_cast<double>(n_mels);
  for (std::size_t k = 0; k < n_coeffs; ++k) {
    const double scale = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    for (std::size_t i = 0; i < n_mels; ++i) {
      d(k, i) = scale * std::cos(std::numbers::pi * (static_cast<double>(i) + 0.5) *
                                 static_cast<double>(k) / n);
    }
  }
  return d;
}

const MelFilterbank& filterbank_for(const MfccParams& p) {
  thread_local MfccParams cached;
  thread_local MelFilterbank* bank = nullptr;
  if (bank == nullptr || cached.n_mels != p.n_mels || cached.fft_size != p.fft_size ||
      cached.sample_rate_hz != p.sample_rate_hz || cached.f_lo_hz != p.f_lo_hz ||
      cached.f_hi_hz != p.f_hi_hz) {
    delete bank;
    bank = new MelFilterbank(p.n_mels, p.fft_size, p.sample_rate_hz, p.f_lo_hz, p.f_hi_hz);
    cached = p;
  }
  return *bank;
}

void check_params(const MfccParams& p) {
  if (p.n_coeffs == 0 || p.n_coeffs > p.n_mels) {
    throw std::invalid_argument("mfcc: need 0 < n_coeffs <= n_mels");
  }
  if (p.sample_rate_hz % (100) != 0 || p.hop_samples * 100 != static_cast<std::size_t>(p.sample_rate_hz)) {
    throw std::invalid_argument("mfcc: hop must pin the frame rate to 100 Hz");
  }
}

}  // namespace

MfccSequence mfcc(const Waveform& x, const MfccParams& params) {
  check_params(params);
  if (x.sample_rate_hz != params.sample_rate_hz) {
    throw std::invalid_argument("mfcc: expected " + std::to_string(params.sample_rate_hz) +
                                " Hz input, got " + std::to_string(x.sample_rate_hz) +
                                " (no implicit resampling)");
  }
  const Spectrogram s = stft(x, params.window_samples, params.hop_samples, params.fft_size);
  const MelFilterbank& bank = filterbank_for(params);
  const Matrix dct = dct_basis(params.n_coeffs, params.n_mels);

  MfccSequence out;
  out.coeffs = Matrix(s.frames(), params.n_coeffs);
  out.frame_rate_hz = params.sample_rate_hz / static_cast<int>(params.hop_samples);

  std::vector<double> logmel(params.n_mels);
  for (std::size_t f = 0; f < s.frames(); ++f) {
    const auto mels = bank.apply(s.magnitudes.row(f));
    for (std::size_t m = 0; m < params.n_mels; ++m) {
      logmel[m] = std::log(std::max(mels[m], params.log_floor));
    }
    for (std::size_t k = 0; k < params.n_coeffs; ++k) {
      double acc = 0.0;
      for (std::size_t m = 0; m < params.n_mels; ++m) acc += dct(k, m) * logmel[m];
      out.coeffs(f, k) = acc;
    }
  }
  return out;
}

Spectrogram mfcc_invert(const MfccSequence& m, const MfccParams& params) {
  check_params(params);
  if (m.coeffs.cols() != params.n_coeffs) {
    throw std::invalid_argument("mfcc_invert: coefficient width mismatch");
  }
  if (!m.coeffs.all_finite()) {
    throw std::invalid_argument("mfcc_invert: non-finite coefficients");
  }
  const MelFilterbank& bank = filterbank_for(params);
  const Matrix dct = dct_basis(params.n_coeffs, params.n_mels);

  Spectrogram s;
  s.magnitudes = Matrix(m.frames(), params.fft_size / 2 + 1);
  s.hop_samples = params.hop_samples;
  s.window_samples = params.window_samples;
  s.fft_size = params.fft_size;
  s.sample_rate_hz = params.sample_rate_hz;

  std::vector<double> mels(params.n_mels);
  for (std::size_t f = 0; f < m.frames(); ++f) {
    // Truncated-DCT inverse is the transpose of the orthonormal basis.
    for (std::size_t i = 0; i < params.n_mels; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < params.n_coeffs; ++k) acc += dct(k, i) * m.coeffs(f, k);
      mels[i] = std::exp(acc);
    }
    const auto bins = bank.pseudo_inverse_apply(mels);
    for (std::size_t b = 0; b < bins.size(); ++b) s.magnitudes(f, b) = bins[b];
  }
  return s;
}

}  // namespace neurovox::dsp
