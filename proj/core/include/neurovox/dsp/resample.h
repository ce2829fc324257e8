// core/include/neurovox/dsp/resample.h

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

#ifndef NEUROVOX_DSP_RESAMPLE_H_
#define NEUROVOX_DSP_RESAMPLE_H_

#include "neurovox/dsp/waveform.h"

namespace neurovox::dsp {

// Rational-ratio polyphase resampler with a Kaiser-windowed sinc prototype
// (beta = 8, 64 taps per phase). Covers the fixed 16 kHz -> 10 kHz path in
// front of the intelligibility metric; any integer rate pair works.
Waveform resample(const Waveform& x, int target_rate_hz);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_RESAMPLE_H_
