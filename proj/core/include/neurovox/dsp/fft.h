// core/include/neurovox/dsp/fft.h

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

#ifndef NEUROVOX_DSP_FFT_H_
#define NEUROVOX_DSP_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace neurovox::dsp {

// In-place complex DFT of arbitrary length: iterative radix-2 for powers of
// two, Bluestein chirp-z otherwise. Twiddle tables are cached per size in
// thread-local storage, so calls are safe from multiple threads and the
// output is bit-deterministic for a given input.
void fft(std::vector<std::complex<double>>& a);

// Inverse DFT, scaled by 1/n.
void ifft(std::vector<std::complex<double>>& a);

// Forward DFT of a real signal zero-padded to fft_size; returns the
// fft_size/2 + 1 non-redundant bins.
std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t fft_size);

}  // namespace neurovox::dsp

#endif  // NEUROVOX_DSP_FFT_H_
