// core/include/neurovox/dsp/iir.h

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

#ifndef NEUROVOX_DSP_IIR_H_
#define NEUROVOX_DSP_IIR_H_

#include <span>
#include <vector>

#include "neurovox/dsp/waveform.h"

namespace neurovox::dsp {

enum class FilterKind { kBandpass, kNotch };

struct IirFilterSpec {
  FilterKind kind = FilterKind::kBandpass;
  int order = 4;
  std::vector<double> cutoffs_hz;  // two for bandpass (low < high), one for notch
  int sample_rate_hz = 0;
};

// One second-order section, denominator normalized to a0 = 1.
struct BiquadSection {
  double b0 = 0, b1 = 0, b2 = 0;
  double a1 = 0, a2 = 0;
};

struct BiquadCascade {
  std::vector<BiquadSection> sections;
  int sample_rate_hz = 0;
};

// Designs the filter as cascaded biquads.
//
// Bandpass is Butterworth via the analog lowpass->bandpass transform and the
// bilinear transform with frequency prewarping. `order` is the prototype
// order, so the digital bandpass has 2*order poles (order-N rolloff on each
// skirt); order 4 with 0.1-70 Hz cutoffs reproduces the usual EEG front end.
// Notch is a unit-circle-zero second-order section (order must be 2).
BiquadCascade design_iir(const IirFilterSpec& spec);

// Runs the cascade over the signal with zero initial state. Output length
// equals input length. Throws on sample-rate mismatch.
Waveform filter_apply(const BiquadCascade& filter, const Waveform& x);

// In-place variant on a raw channel, used by the EEG preprocessing loop.
void filter_apply_inplace(const BiquadCascade& filter, std::span<double> x);

// |H(e^{j 2 pi f / fs})| of the cascade.
double magnitude_response(const BiquadCascade& filter, double freq_hz);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_IIR_H_
