// core/include/neurovox/dsp/wav_io.h

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

#ifndef NEUROVOX_DSP_WAV_IO_H_
#define NEUROVOX_DSP_WAV_IO_H_

#include <string>

#include "neurovox/dsp/waveform.h"

namespace neurovox::dsp {

// Reads a mono 16-bit PCM little-endian WAV file. Anything else is an error;
// there is no resampling or format conversion on this path.
Waveform read_wav(const std::string& path);

// Writes mono 16-bit PCM. Samples are clamped to [-1, 1] before quantization.
void write_wav(const std::string& path, const Waveform& w);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_WAV_IO_H_
