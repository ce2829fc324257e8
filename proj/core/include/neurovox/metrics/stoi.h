// core/include/neurovox/metrics/stoi.h

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

#ifndef NEUROVOX_METRICS_STOI_H_
#define NEUROVOX_METRICS_STOI_H_

#include "neurovox/dsp/waveform.h"

namespace neurovox::metrics {

// Short-time objective intelligibility of `degraded` against the `clean`
// reference. The argument order matters: the metric is not symmetric, and
// silent-frame selection is driven by the clean signal.
//
// Pipeline: resample both to 10 kHz; drop frames more than 40 dB below the
// loudest clean frame (256-sample Hann frames, hop 128); 512-point STFT;
// 15 one-third-octave bands from 150 Hz; per-band correlation of clean and
// normalized+clipped (-15 dB SDR bound) degraded envelopes over 30-frame
// segments; the score is the mean correlation, in [-1, 1].
//
// Signals are trimmed to the shorter length first. Too little non-silent
// material for one 30-frame segment is an error.
double stoi(const dsp::Waveform& clean, const dsp::Waveform& degraded);

}  // namespace neurovox::metrics

#endif  // NEUROVOX_METRICS_STOI_H_
