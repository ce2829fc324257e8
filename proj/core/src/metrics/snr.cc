// core/src/metrics/snr.cc

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

#include "neurovox/metrics/snr.h"

#include <cmath>
#include <stdexcept>

namespace neurovox::metrics {

double snr_mean_std(const dsp::Waveform& x) {
  dsp::validate(x, "snr_mean_std");
  const std::size_t n = x.samples.size();
  if (n < 2) throw std::invalid_argument("snr_mean_std: need at least 2 samples");
  double mean = 0.0;
  for (double s : x.samples) mean += s;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double s : x.samples) var += (s - mean) * (s - mean);
  var /= static_cast<double>(n);
  if (var == 0.0) {
    throw std::invalid_argument("snr_mean_std: constant signal has zero deviation");
  }
  return mean / std::sqrt(var);
}

}  // namespace neurovox::metrics
