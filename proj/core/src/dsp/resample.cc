// core/src/dsp/resample.cc

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

#include "neurovox/dsp/resample.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace neurovox::dsp {
namespace {

constexpr double kKaiserBeta = 8.0;
constexpr std::size_t kTapsPerPhase = 64;

double bessel_i0(double x) {
  double term = 1.0, sum = 1.0;
  const double half = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

// Kaiser-windowed sinc prototype at the upsampled rate, gain L in passband.
std::vector<double> design_prototype(std::size_t up, std::size_t down) {
  const std::size_t n = kTapsPerPhase * up;
  const double cutoff = std::numbers::pi / static_cast<double>(std::max(up, down));
  const double center = (static_cast<double>(n) - 1.0) / 2.0;
  const double i0_beta = bessel_i0(kKaiserBeta);
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) - center;
    const double sinc = t == 0.0 ? cutoff / std::numbers::pi
                                 : std::sin(cutoff * t) / (std::numbers::pi * t);
    const double frac = t / center;
    const double kaiser = bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - frac * frac))) / i0_beta;
    h[i] = static_cast<double>(up) * sinc * kaiser;
  }
  return h;
}

}  // namespace

Waveform resample(const Waveform& x, int target_rate_hz) {
  validate(x, "resample");
  if (target_rate_hz <= 0) {
    throw std::invalid_argument("resample: target rate must be positive");
  }
  if (target_rate_hz == x.sample_rate_hz) return x;

  const std::size_t g = std::gcd(x.sample_rate_hz, target_rate_hz);
  const std::size_t up = static_cast<std::size_t>(target_rate_hz) / g;
  const std::size_t down = static_cast<std::size_t>(x.sample_rate_hz) / g;
  const std::vector<double> h = design_prototype(up, down);
  const std::size_t n_taps = h.size();
  const std::size_t delay = (n_taps - 1) / 2;  // group delay, upsampled samples

  const std::size_t in_len = x.samples.size();
  const std::size_t out_len = (in_len * up + down - 1) / down;

  Waveform y;
  y.sample_rate_hz = target_rate_hz;
  y.samples.resize(out_len, 0.0);

  for (std::size_t m = 0; m < out_len; ++m) {
    // Position on the upsampled grid, shifted so the filter is centered.
    const std::size_t t = m * down + delay;
    const std::size_t phase = t % up;
    const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(t / up);
    double acc = 0.0;
    for (std::size_t j = 0; phase + j * up < n_taps; ++j) {
      const std::ptrdiff_t idx = base - static_cast<std::ptrdiff_t>(j);
      if (idx < 0) break;
      if (idx < static_cast<std::ptrdiff_t>(in_len)) {
        acc += h[phase + j * up] * x.samples[static_cast<std::size_t>(idx)];
      }
    }
    y.samples[m] = acc;
  }
  return y;
}

}  // namespace neurovox::dsp
