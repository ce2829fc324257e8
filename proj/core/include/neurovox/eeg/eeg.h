// core/include/neurovox/eeg/eeg.h

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

#ifndef NEUROVOX_EEG_EEG_H_
#define NEUROVOX_EEG_EEG_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "neurovox/common/matrix.h"

namespace neurovox::eeg {

inline constexpr std::size_t kNumChannels = 31;   // data channels, ground excluded
inline constexpr int kEegRateHz = 1000;
inline constexpr std::size_t kFeaturesPerChannel = 5;
inline constexpr std::size_t kFeatureWidth = kNumChannels * kFeaturesPerChannel;  // 155

// Feature extraction geometry: 100 ms windows hopped every 10 ms give the
// 100 Hz feature rate.
inline constexpr std::size_t kFeatureWindowSamples = 100;
inline constexpr std::size_t kFeatureHopSamples = 10;

// Multichannel scalp recording, microvolts, channels x samples.
struct EegRecording {
  Matrix samples;  // kNumChannels x n
  int sample_rate_hz = kEegRateHz;
  std::vector<std::string> channel_labels;  // 10-20 names; metadata only

  std::size_t n_samples() const { return samples.cols(); }
};

// The standard label set for a 32-electrode cap with one ground.
std::vector<std::string> default_channel_labels();

// Throws unless the recording has exactly 31 channels at 1000 Hz with finite
// samples.
void validate(const EegRecording& x, const std::string& what);

// Per-window statistics. Order fixes the column layout of the 155-dim
// feature vector: column 5*channel + feature.
enum class WindowFeature { kRms = 0, kZcr = 1, kMwa = 2, kKurtosis = 3, kPse = 4 };

// Feature column of `feature` for `channel` in the assembled layout.
std::size_t feature_column(std::size_t channel, WindowFeature feature);

// One statistic of one window. Window length must be >= 2.
//   rms       sqrt(mean(x^2))
//   zcr       sign changes / (len-1), sign(0) treated as +1
//   mwa       mean(x)
//   kurtosis  Pearson m4/m2^2; 0 for a (numerically) constant window
//   pse       Shannon entropy (nats) of the normalized periodogram, DC bin
//             excluded; 0 for a zero-power window
double window_feature(std::span<const double> window, WindowFeature kind);

// Band-pass (0.1-70 Hz, order-4 Butterworth prototype) then 60 Hz notch,
// applied per channel. Shape preserved.
EegRecording preprocess_eeg(const EegRecording& x);

struct EegFeatureSequence {
  Matrix features;  // frames x 155
  int frame_rate_hz = 100;

  std::size_t frames() const { return features.rows(); }
};

// Sliding-window feature extraction over every channel. Frame count is
// floor((samples - 100)/10) + 1; shorter recordings are an error.
EegFeatureSequence extract_eeg_features(const EegRecording& x);

}  // namespace neurovox::eeg

#endif  // NEUROVOX_EEG_EEG_H_
