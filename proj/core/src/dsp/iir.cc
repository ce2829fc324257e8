// core/src/dsp/iir.cc

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

#include "neurovox/dsp/iir.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace neurovox::dsp {
namespace {

constexpr double kPi = std::numbers::pi;

// -1 dB at +-5 Hz around a 60 Hz center needs Q >= ~12; 15 leaves margin.
constexpr double kNotchQ = 15.0;

void check_spec(const IirFilterSpec& spec) {
  if (spec.sample_rate_hz <= 0) {
    throw std::invalid_argument("design_iir: sample rate must be positive");
  }
  if (spec.order <= 0) {
    throw std::invalid_argument("design_iir: order must be positive");
  }
  const double nyquist = spec.sample_rate_hz / 2.0;
  for (double c : spec.cutoffs_hz) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("design_iir: cutoffs must be positive and finite");
    }
    if (c >= nyquist) {
      throw std::invalid_argument("design_iir: cutoff at or above Nyquist");
    }
  }
  if (spec.kind == FilterKind::kBandpass) {
    if (spec.cutoffs_hz.size() != 2 || spec.cutoffs_hz[0] >= spec.cutoffs_hz[1]) {
      throw std::invalid_argument("design_iir: bandpass needs two cutoffs, low < high");
    }
  } else {
    if (spec.cutoffs_hz.size() != 1) {
      throw std::invalid_argument("design_iir: notch needs one center frequency");
    }
    if (spec.order != 2) {
      throw std::invalid_argument("design_iir: notch is a second-order section; order must be 2");
    }
  }
}

std::complex<double> section_response(const BiquadSection& s, std::complex<double> z1) {
  // z1 = e^{-jw}
  const std::complex<double> z2 = z1 * z1;
  return (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
}

BiquadCascade design_bandpass(const IirFilterSpec& spec) {
  using cd = std::complex<double>;
  const double fs = spec.sample_rate_hz;
  const int n = spec.order;

  // Prewarped analog band edges.
  const double wl = 2.0 * fs * std::tan(kPi * spec.cutoffs_hz[0] / fs);
  const double wh = 2.0 * fs * std::tan(kPi * spec.cutoffs_hz[1] / fs);
  const double w0 = std::sqrt(wl * wh);
  const double bw = wh - wl;

  // Butterworth prototype poles (left half-plane, unit cutoff), transformed
  // to bandpass: each prototype pole p yields the roots of
  // s^2 - p*bw*s + w0^2 = 0.
  std::vector<cd> analog_poles;
  analog_poles.reserve(2 * n);
  for (int k = 0; k < n; ++k) {
    const double theta = kPi * (2.0 * k + n + 1.0) / (2.0 * n);
    const cd p{std::cos(theta), std::sin(theta)};
    const cd pb = p * bw;
    const cd disc = std::sqrt(pb * pb - 4.0 * w0 * w0);
    analog_poles.push_back((pb + disc) * 0.5);
    analog_poles.push_back((pb - disc) * 0.5);
  }

  // Bilinear transform. Zeros: n at z = +1 (from s = 0), n at z = -1.
  std::vector<cd> zpoles;
  zpoles.reserve(analog_poles.size());
  const double c = 2.0 * fs;
  for (const cd& s : analog_poles) {
    zpoles.push_back((c + s) / (c - s));
  }

  // Group into conjugate pairs (upper half-plane poles carry their mirror).
  std::vector<cd> upper;
  std::vector<double> reals;
  for (const cd& zp : zpoles) {
    if (zp.imag() > 1e-12) {
      upper.push_back(zp);
    } else if (zp.imag() >= -1e-12) {
      reals.push_back(zp.real());
    }
  }
  std::sort(upper.begin(), upper.end(),
            [](const cd& a, const cd& b) { return std::abs(a) < std::abs(b); });
  std::sort(reals.begin(), reals.end());

  BiquadCascade cascade;
  cascade.sample_rate_hz = spec.sample_rate_hz;
  for (const cd& zp : upper) {
    BiquadSection s;
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;  // zeros at +1 and -1
    s.a1 = -2.0 * zp.real();
    s.a2 = std::norm(zp);
    cascade.sections.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < reals.size(); i += 2) {
    BiquadSection s;
    s.b0 = 1.0;
    s.b1 = 0.0;
    s.b2 = -1.0;
    s.a1 = -(reals[i] + reals[i + 1]);
    s.a2 = reals[i] * reals[i + 1];
    cascade.sections.push_back(s);
  }

  // Normalize to unit gain at the (digital image of the) analog center.
  const double f0 = fs / kPi * std::atan(w0 / (2.0 * fs));
  const double g = magnitude_response(cascade, f0);
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw std::runtime_error("design_iir: degenerate bandpass gain");
  }
  const double per_section = std::pow(1.0 / g, 1.0 / cascade.sections.size());
  for (BiquadSection& s : cascade.sections) {
    s.b0 *= per_section;
    s.b1 *= per_section;
    s.b2 *= per_section;
  }
  return cascade;
}

BiquadCascade design_notch(const IirFilterSpec& spec) {
  const double fs = spec.sample_rate_hz;
  const double w0 = 2.0 * kPi * spec.cutoffs_hz[0] / fs;
  const double alpha = std::sin(w0) / (2.0 * kNotchQ);
  const double a0 = 1.0 + alpha;

  BiquadSection s;
  s.b0 = 1.0 / a0;
  s.b1 = -2.0 * std::cos(w0) / a0;
  s.b2 = 1.0 / a0;
  s.a1 = -2.0 * std::cos(w0) / a0;
  s.a2 = (1.0 - alpha) / a0;

  BiquadCascade cascade;
  cascade.sample_rate_hz = spec.sample_rate_hz;
  cascade.sections.push_back(s);
  return cascade;
}

}  // namespace

BiquadCascade design_iir(const IirFilterSpec& spec) {
  check_spec(spec);
  return spec.kind == FilterKind::kBandpass ? design_bandpass(spec) : design_notch(spec);
}

void filter_apply_inplace(const BiquadCascade& filter, std::span<double> x) {
  for (const BiquadSection& s : filter.sections) {
    // Transposed direct form II.
    double s1 = 0.0, s2 = 0.0;
    for (double& v : x) {
      const double in = v;
      const double out = s.b0 * in + s1;
      s1 = s.b1 * in - s.a1 * out + s2;
      s2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
}

Waveform filter_apply(const BiquadCascade& filter, const Waveform& x) {
  validate(x, "filter_apply");
  if (filter.sample_rate_hz != x.sample_rate_hz) {
    throw std::invalid_argument("filter_apply: filter/signal sample-rate mismatch");
  }
  Waveform y = x;
  filter_apply_inplace(filter, y.samples);
  return y;
}

double magnitude_response(const BiquadCascade& filter, double freq_hz) {
  const double w = 2.0 * kPi * freq_hz / filter.sample_rate_hz;
  const std::complex<double> z1{std::cos(-w), std::sin(-w)};
  std::complex<double> h{1.0, 0.0};
  for (const BiquadSection& s : filter.sections) h *= section_response(s, z1);
  return std::abs(h);
}

}  // namespace neurovox::dsp
