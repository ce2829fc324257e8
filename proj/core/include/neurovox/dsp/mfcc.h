// core/include/neurovox/dsp/mfcc.h

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

#ifndef NEUROVOX_DSP_MFCC_H_
#define NEUROVOX_DSP_MFCC_H_

#include <cstddef>

#include "neurovox/common/matrix.h"
#include "neurovox/dsp/stft.h"
#include "neurovox/dsp/waveform.h"

namespace neurovox::dsp {

// 13 cepstral coefficients (c0..c12) per frame at exactly 100 frames/s.
struct MfccSequence {
  Matrix coeffs;  // frames x 13
  int frame_rate_hz = 100;

  std::size_t frames() const { return coeffs.rows(); }
};

// Front-end geometry. The 100 Hz frame rate is fixed by hop = rate/100; the
// rest are conventional ASR values: 25 ms Hann window, FFT 512, 26 triangular
// mel filters over 0-8 kHz, log floor 1e-10, orthonormal DCT-II.
struct MfccParams {
  std::size_t window_samples = 400;
  std::size_t hop_samples = 160;
  std::size_t fft_size = 512;
  std::size_t n_mels = 26;
  double f_lo_hz = 0.0;
  double f_hi_hz = 8000.0;
  double log_floor = 1e-10;
  std::size_t n_coeffs = 13;
  int sample_rate_hz = 16000;
};

// STFT -> mel magnitudes -> floored log -> DCT-II, keep c0..c12.
// The input must be at params.sample_rate_hz; there is no implicit resampling.
MfccSequence mfcc(const Waveform& x, const MfccParams& params = {});

// Zero-pads the 13 coefficients to the mel band count, inverts the DCT,
// exponentiates, and maps mel energies to linear magnitude bins through the
// filterbank pseudo-inverse (negatives clamped to 0).
Spectrogram mfcc_invert(const MfccSequence& m, const MfccParams& params = {});

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_MFCC_H_
