// core/include/neurovox/metrics/spectral.h

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

#ifndef NEUROVOX_METRICS_SPECTRAL_H_
#define NEUROVOX_METRICS_SPECTRAL_H_

#include "neurovox/dsp/waveform.h"

namespace neurovox::metrics {

// || |STFT(est)| - |STFT(ref)| ||_F / || |STFT(ref)| ||_F with the standard
// 25 ms / 10 ms / 512 analysis. Signals are trimmed to the shorter length;
// sample rates must match; a zero-energy reference is an error.
double spectral_convergence(const dsp::Waveform& ref, const dsp::Waveform& est);

}  // namespace neurovox::metrics

#endif  // NEUROVOX_METRICS_SPECTRAL_H_
