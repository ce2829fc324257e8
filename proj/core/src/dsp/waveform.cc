// core/src/dsp/waveform.cc

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

#include "neurovox/dsp/waveform.h"

#include <cmath>
#include <stdexcept>

namespace neurovox::dsp {

void validate(const Waveform& w, const std::string& what) {
  if (w.sample_rate_hz <= 0) {
    throw std::invalid_argument(what + ": sample rate must be positive");
  }
  for (double s : w.samples) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument(what + ": non-finite sample");
    }
  }
}

double rms(const std::vector<double>& samples) {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (double s : samples) acc += s * s;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

}  // namespace neurovox::dsp
