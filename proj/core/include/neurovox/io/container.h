// core/include/neurovox/io/container.h

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

#ifndef NEUROVOX_IO_CONTAINER_H_
#define NEUROVOX_IO_CONTAINER_H_

#include <string>

#include "neurovox/common/matrix.h"
#include "neurovox/eeg/eeg.h"

namespace neurovox::io {

// On-disk container for feature matrices and raw EEG:
//   "NVC1" magic | u32 LE header length | header JSON | row-major f64 LE
// The header carries {kind, frame_rate_hz, frames, width} plus, for raw EEG,
// the sample rate and channel labels. The payload byte length must equal
// frames * width * 8 or the load fails.
//
// kinds: "mfcc13", "eeg155", "eeg30" (feature sequences at 100 Hz) and
// "eeg_raw" (channels x samples at 1000 Hz).

struct FeatureFile {
  std::string kind;
  int frame_rate_hz = 0;
  Matrix data;  // frames x width
};

void write_feature_file(const std::string& path, const std::string& kind,
                        int frame_rate_hz, const Matrix& data);

// expected_kind empty means "accept any feature kind".
FeatureFile read_feature_file(const std::string& path, const std::string& expected_kind = "");

void write_eeg_file(const std::string& path, const eeg::EegRecording& recording);
eeg::EegRecording read_eeg_file(const std::string& path);

}  // namespace neurovox::io

#endif  // NEUROVOX_IO_CONTAINER_H_
