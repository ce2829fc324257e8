// core/include/neurovox/synth/synth.h

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

#ifndef NEUROVOX_SYNTH_SYNTH_H_
#define NEUROVOX_SYNTH_SYNTH_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "neurovox/common/matrix.h"
#include "neurovox/dsp/mfcc.h"
#include "neurovox/dsp/waveform.h"
#include "neurovox/eeg/eeg.h"

namespace neurovox::synth {

// Generator knobs. Everything is a pure function of (params, seed); the
// mixing matrix and latent coupling weights derive from mixing_seed so they
// stay fixed across a corpus (the EEG-to-speech mapping must be learnable
// across utterances).
struct SynthParams {
  double duration_s = 2.0;
  double pitch_lo_hz = 100.0;
  double pitch_hi_hz = 220.0;
  std::size_t n_latents = 16;
  std::size_t n_coupled_latents = 8;  // driven by speech energy/centroid
  double coupling = 0.7;
  double latent_smooth_ms = 50.0;
  double pink_noise_level = 0.5;  // per-channel 1/f noise, relative scale
  std::uint64_t mixing_seed = 42;
};

void validate(const SynthParams& params);

// Test-only introspection into the latent construction.
struct SynthDiagnostics {
  Matrix latents;                     // n_latents x eeg_samples
  std::vector<double> frame_energy;   // speech energy per 10 ms frame
  std::vector<double> frame_centroid; // spectral centroid per 10 ms frame
};

// One utterance: formant-like voiced/unvoiced speech at 16 kHz plus a 31
// channel EEG recording whose coupled latents follow the speech's energy and
// spectral centroid. Deterministic given (params, seed).
std::pair<dsp::Waveform, eeg::EegRecording> synth_utterance(
    const SynthParams& params, std::uint64_t seed, SynthDiagnostics* diagnostics = nullptr);

// Element-wise Gaussian corruption of the cepstra; sigma 10 is the training
// default.
dsp::MfccSequence corrupt_mfcc(const dsp::MfccSequence& m, double sigma, std::uint64_t seed);

enum class NoiseKind { kMusicLike, kWhite };

// The nominal level of the simulated noisy test condition. Levels are
// relative: the mapping to mixture SNR is calibrated so this preset level
// produces a -5 dB SNR mixture.
inline constexpr double kPaperTestLevelDb = 65.0;

// Synthesizes a background (slowly modulated tones + filtered noise, or
// white) and adds it to the clean signal at
//   20*log10(rms_noise/rms_clean) = level_db - 65 + 5.
dsp::Waveform mix_background(const dsp::Waveform& clean, NoiseKind kind, double level_db,
                             std::uint64_t seed);

}  // namespace neurovox::synth

#endif  // NEUROVOX_SYNTH_SYNTH_H_
