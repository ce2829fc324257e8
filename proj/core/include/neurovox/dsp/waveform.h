// core/include/neurovox/dsp/waveform.h

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

#ifndef NEUROVOX_DSP_WAVEFORM_H_
#define NEUROVOX_DSP_WAVEFORM_H_

#include <string>
#include <vector>

namespace neurovox::dsp {

// Mono audio signal. Samples are dimensionless amplitudes, nominally [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

// Throws std::invalid_argument unless sample_rate_hz > 0 and every sample is
// finite. `what` names the operand in the error message.
void validate(const Waveform& w, const std::string& what);

double rms(const std::vector<double>& samples);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_WAVEFORM_H_
