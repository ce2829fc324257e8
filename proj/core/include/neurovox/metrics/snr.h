// core/include/neurovox/metrics/snr.h

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

#ifndef NEUROVOX_METRICS_SNR_H_
#define NEUROVOX_METRICS_SNR_H_

#include "neurovox/dsp/waveform.h"

namespace neurovox::metrics {

// mean(x)/std(x) with the population standard deviation. This is the
// deliberately unusual mean-to-deviation ratio, not a noise-power SNR; it is
// scale invariant and near zero for any zero-mean signal. A constant signal
// (zero deviation) is an error.
double snr_mean_std(const dsp::Waveform& x);

}  // namespace neurovox::metrics

#endif  // NEUROVOX_METRICS_SNR_H_
