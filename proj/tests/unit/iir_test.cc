// tests/unit/iir_test.cc

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

#include <cmath>
#include <complex>
#include <numbers>

#include <stdexcept>
#include <string>

#include <doctest.h>

namespace {

using neurovox::dsp::BiquadCascade;
using neurovox::dsp::design_iir;
using neurovox::dsp::filter_apply;
using neurovox::dsp::FilterKind;
using neurovox::dsp::IirFilterSpec;
using neurovox::dsp::magnitude_response;
using neurovox::dsp::Waveform;

IirFilterSpec eeg_bandpass_spec() {
  IirFilterSpec spec;
  spec.kind = FilterKind::kBandpass;
  spec.order = 4;
  spec.cutoffs_hz = {0.1, 70.0};
  spec.sample_rate_hz = 1000;
  return spec;
}

IirFilterSpec notch60_spec() {
  IirFilterSpec spec;
  spec.kind = FilterKind::kNotch;
  spec.order = 2;
  spec.cutoffs_hz = {60.0};
  spec.sample_rate_hz = 1000;
  return spec;
}

// Single-frequency amplitude of the tail of a signal (steady state).
double tail_amplitude(const std::vector<double>& x, double freq_hz, double fs,
                      std::size_t tail) {
  std::complex<double> acc{0.0, 0.0};
  const std::size_t start = x.size() - tail;
  for (std::size_t i = 0; i < tail; ++i) {
    const double ang =
        -2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / fs;
    acc += x[start + i] * std::complex<double>{std::cos(ang), std::sin(ang)};
  }
  return 2.0 * std::abs(acc) / static_cast<double>(tail);
}

double db(double ratio) { return 20.0 * std::log10(ratio); }

}  // namespace

TEST_SUITE("iir") {

TEST_CASE("bandpass passes 35 Hz within 1 dB of the peak") {
  const BiquadCascade f = design_iir(eeg_bandpass_spec());
  double peak = 0.0;
  for (double freq = 0.05; freq < 100.0; freq *= 1.05) {
    peak = std::max(peak, magnitude_response(f, freq));
  }
  const double g35 = magnitude_response(f, 35.0);
  CHECK(db(g35 / peak) >= -1.0);
  CHECK(db(g35 / peak) <= 0.0);
}

TEST_CASE("bandpass meets the stopband contract at 0.01 and 140 Hz") {
  const BiquadCascade f = design_iir(eeg_bandpass_spec());
  const double center = magnitude_response(f, std::sqrt(0.1 * 70.0));
  CHECK(db(magnitude_response(f, 0.01) / center) <= -20.0);
  CHECK(db(magnitude_response(f, 140.0) / center) <= -20.0);
}

TEST_CASE("notch kills its center and spares +-5 Hz") {
  const BiquadCascade f = design_iir(notch60_spec());
  CHECK(db(magnitude_response(f, 60.0)) <= -20.0);
  CHECK(db(magnitude_response(f, 55.0)) >= -1.0);
  CHECK(db(magnitude_response(f, 65.0)) >= -1.0);
}

TEST_CASE("notch on a pure 60 Hz sinusoid leaves under 10% RMS") {
  const BiquadCascade f = design_iir(notch60_spec());
  Waveform x;
  x.sample_rate_hz = 1000;
  x.samples.resize(8000);
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    x.samples[i] = std::sin(2.0 * std::numbers::pi * 60.0 * static_cast<double>(i) / 1000.0);
  }
  const Waveform y = filter_apply(f, x);
  // Skip the transient, compare tail RMS.
  double in_rms = 0.0, out_rms = 0.0;
  for (std::size_t i = 4000; i < 8000; ++i) {
    in_rms += x.samples[i] * x.samples[i];
    out_rms += y.samples[i] * y.samples[i];
  }
  CHECK(std::sqrt(out_rms) <= 0.1 * std::sqrt(in_rms));
}

TEST_CASE("invalid specs are rejected") {
  IirFilterSpec above_nyquist = eeg_bandpass_spec();
  above_nyquist.cutoffs_hz = {0.1, 600.0};
  CHECK_THROWS_AS(design_iir(above_nyquist), std::invalid_argument);

  IirFilterSpec bad_order = eeg_bandpass_spec();
  bad_order.order = 0;
  CHECK_THROWS_AS(design_iir(bad_order), std::invalid_argument);

  IirFilterSpec swapped = eeg_bandpass_spec();
  swapped.cutoffs_hz = {70.0, 0.1};
  CHECK_THROWS_AS(design_iir(swapped), std::invalid_argument);
}

TEST_CASE("filter_apply contract: length, zeros, rate mismatch") {
  const BiquadCascade f = design_iir(eeg_bandpass_spec());
  Waveform zeros;
  zeros.sample_rate_hz = 1000;
  zeros.samples.assign(1000, 0.0);
  const Waveform out = filter_apply(f, zeros);
  REQUIRE(out.samples.size() == zeros.samples.size());
  for (double v : out.samples) CHECK(v == 0.0);

  Waveform wrong_rate = zeros;
  wrong_rate.sample_rate_hz = 16000;
  CHECK_THROWS_AS(filter_apply(f, wrong_rate), std::invalid_argument);
}

TEST_CASE("DC offset is blocked to under 1% steady state") {
  // Oracle: the designed response at 0 Hz is exactly zero (zeros at z=1).
  const BiquadCascade f = design_iir(eeg_bandpass_spec());
  CHECK(magnitude_response(f, 0.0) < 1e-12);

  Waveform x;
  x.sample_rate_hz = 1000;
  x.samples.assign(30000, 1.0);
  const Waveform y = filter_apply(f, x);
  double tail_mean = 0.0;
  for (std::size_t i = 25000; i < 30000; ++i) tail_mean += y.samples[i];
  tail_mean /= 5000.0;
  CHECK(std::abs(tail_mean) < 0.01);
}

TEST_CASE("200 Hz rides 20 dB under 30 Hz after the bandpass") {
  const BiquadCascade f = design_iir(eeg_bandpass_spec());
  Waveform x;
  x.sample_rate_hz = 1000;
  x.samples.resize(20000);
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    const double t = static_cast<double>(i) / 1000.0;
    x.samples[i] = std::sin(2.0 * std::numbers::pi * 30.0 * t) +
                   std::sin(2.0 * std::numbers::pi * 200.0 * t);
  }
  const Waveform y = filter_apply(f, x);
  const double a30 = tail_amplitude(y.samples, 30.0, 1000.0, 4000);
  const double a200 = tail_amplitude(y.samples, 200.0, 1000.0, 4000);
  CHECK(db(a200 / a30) <= -20.0);

  // Against the design oracle: measured attenuation tracks the frequency
  // response within a dB.
  const double predicted = db(magnitude_response(f, 200.0) / magnitude_response(f, 30.0));
  CHECK(std::abs(db(a200 / a30) - predicted) < 1.0);
}

TEST_CASE("filters are stable: the impulse response dies out") {
  // The 0.1 Hz corner carries poles with second-scale time constants, so the
  // bandpass needs ~26 s to fall below 1e-6 in absolute terms; the notch gets
  // there well inside 10 s. Asserted horizons carry margin over measurement.
  struct Case {
    IirFilterSpec spec;
    std::size_t horizon_samples;
  };
  for (const auto& c : {Case{eeg_bandpass_spec(), 30000}, Case{notch60_spec(), 10000}}) {
    const BiquadCascade f = design_iir(c.spec);
    Waveform impulse;
    impulse.sample_rate_hz = 1000;
    impulse.samples.assign(40000, 0.0);
    impulse.samples[0] = 1.0;
    const Waveform h = filter_apply(f, impulse);
    double peak_tail = 0.0, peak_overall = 0.0;
    for (std::size_t i = 0; i < h.samples.size(); ++i) {
      peak_overall = std::max(peak_overall, std::abs(h.samples[i]));
      if (i >= c.horizon_samples) peak_tail = std::max(peak_tail, std::abs(h.samples[i]));
    }
    CAPTURE(peak_overall);
    CHECK(peak_tail < 1e-6);
    CHECK(peak_overall < 10.0);  // no resonant blowup anywhere
  }
}

}  // TEST_SUITE
