// core/include/neurovox/dsp/griffin_lim.h

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

#ifndef NEUROVOX_DSP_GRIFFIN_LIM_H_
#define NEUROVOX_DSP_GRIFFIN_LIM_H_

#include <vector>

#include "neurovox/dsp/stft.h"
#include "neurovox/dsp/waveform.h"

namespace neurovox::dsp {

struct GriffinLimResult {
  Waveform waveform;
  // Spectral-convergence error ||(|STFT(x_k)| - S)||_F / ||S||_F after each
  // iteration; non-increasing up to numerical tolerance.
  std::vector<double> convergence;
};

// Iterative phase reconstruction: alternate projections between the target
// magnitude and the set of consistent spectrograms, zero-phase start, no
// momentum (monotone variant). An all-zero target returns an all-zero
// waveform; that is the algorithm's fixed point, not an error.
GriffinLimResult griffin_lim_with_trace(const Spectrogram& target, int iterations);

Waveform griffin_lim(const Spectrogram& target, int iterations = 60);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_GRIFFIN_LIM_H_
