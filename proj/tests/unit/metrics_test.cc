// tests/unit/metrics_test.cc

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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"
#include "neurovox/dsp/resample.h"
#include "neurovox/metrics/pesq.h"
#include "neurovox/metrics/report.h"
#include "neurovox/metrics/snr.h"
#include "neurovox/metrics/spectral.h"
#include "neurovox/metrics/stoi.h"
#include "neurovox/synth/synth.h"

namespace {

using neurovox::Rng;
using neurovox::dsp::Waveform;
using namespace neurovox::metrics;

Waveform speech_utterance(std::uint64_t seed) {
  neurovox::synth::SynthParams params;
  auto [speech, eeg] = neurovox::synth::synth_utterance(params, seed);
  return speech;
}

Waveform add_noise_at_snr(const Waveform& clean, double snr_db, std::uint64_t seed) {
  Rng rng(seed);
  const double clean_rms = neurovox::dsp::rms(clean.samples);
  const double noise_rms = clean_rms * std::pow(10.0, -snr_db / 20.0);
  Waveform out = clean;
  for (auto& v : out.samples) v += noise_rms * rng.gaussian();
  return out;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("mean-to-deviation snr: zero-mean tone, known vector, constant error") {
  Waveform tone;
  tone.sample_rate_hz = 16000;
  tone.samples.resize(1600);  // whole number of 100 Hz periods
  for (std::size_t i = 0; i < tone.samples.size(); ++i) {
    tone.samples[i] = std::sin(2.0 * std::numbers::pi * 100.0 * static_cast<double>(i) / 16000.0);
  }
  CHECK(std::abs(snr_mean_std(tone)) < 1e-6);

  Waveform v;
  v.sample_rate_hz = 1;
  v.samples = {1.0, 1.0, 1.0, 3.0};
  CHECK(snr_mean_std(v) == doctest::Approx(1.7320508075688772).epsilon(1e-12));

  Waveform constant;
  constant.sample_rate_hz = 1;
  constant.samples = {0.5, 0.5, 0.5};
  CHECK_THROWS_AS(snr_mean_std(constant), std::invalid_argument);
}

TEST_CASE("snr is scale invariant") {
  Waveform v;
  v.sample_rate_hz = 1;
  v.samples = {0.2, -0.4, 0.8, 0.1, 0.05};
  const double base = snr_mean_std(v);
  for (auto& s : v.samples) s *= 7.25;
  CHECK(snr_mean_std(v) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("stoi of a signal against itself is essentially one") {
  const Waveform x = speech_utterance(301);
  CHECK(stoi(x, x) >= 0.999);
}

TEST_CASE("stoi degrades monotonically with additive noise") {
  const Waveform x = speech_utterance(302);
  const double s20 = stoi(x, add_noise_at_snr(x, 20.0, 1));
  const double s0 = stoi(x, add_noise_at_snr(x, 0.0, 2));
  const double sm10 = stoi(x, add_noise_at_snr(x, -10.0, 3));
  CHECK(s20 > s0);
  CHECK(s0 > sm10);
}

TEST_CASE("stoi of unrelated noise stays low") {
  const Waveform x = speech_utterance(303);
  Rng rng(4);
  Waveform noise = x;
  for (auto& v : noise.samples) v = 0.05 * rng.gaussian();
  CHECK(stoi(x, noise) < 0.3);
}

TEST_CASE("stoi is amplitude invariant in the degraded signal") {
  const Waveform x = speech_utterance(304);
  const Waveform noisy = add_noise_at_snr(x, 5.0, 9);
  const double base = stoi(x, noisy);
  for (double alpha : {0.5, 2.0}) {
    Waveform scaled = noisy;
    for (auto& v : scaled.samples) v *= alpha;
    CHECK(stoi(x, scaled) == doctest::Approx(base).epsilon(1e-6));
  }
}

TEST_CASE("stoi input validation") {
  const Waveform x = speech_utterance(305);
  Waveform other = x;
  other.sample_rate_hz = 8000;
  CHECK_THROWS_AS(stoi(x, other), std::invalid_argument);

  Waveform blip;
  blip.sample_rate_hz = 16000;
  blip.samples.assign(1000, 0.1);  // far too short for a 30-frame segment
  CHECK_THROWS_AS(stoi(blip, blip), std::invalid_argument);
}

TEST_CASE("resampler preserves a mid-band tone") {
  Waveform tone;
  tone.sample_rate_hz = 16000;
  tone.samples.resize(16000);
  for (std::size_t i = 0; i < tone.samples.size(); ++i) {
    tone.samples[i] =
        0.5 * std::sin(2.0 * std::numbers::pi * 1000.0 * static_cast<double>(i) / 16000.0);
  }
  const Waveform out = neurovox::dsp::resample(tone, 10000);
  CHECK(out.sample_rate_hz == 10000);
  CHECK(out.samples.size() == 10000);
  // Interior RMS should match 0.5/sqrt(2) within a percent.
  double rms = 0.0;
  for (std::size_t i = 1000; i < 9000; ++i) rms += out.samples[i] * out.samples[i];
  rms = std::sqrt(rms / 8000.0);
  CHECK(rms == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(0.01));
}

TEST_CASE("spectral convergence: identity, silence, scaling") {
  const Waveform x = speech_utterance(306);
  CHECK(spectral_convergence(x, x) == 0.0);

  Waveform zero = x;
  for (auto& v : zero.samples) v = 0.0;
  CHECK(spectral_convergence(x, zero) == doctest::Approx(1.0).epsilon(1e-12));

  Waveform half = x;
  for (auto& v : half.samples) v *= 0.5;
  CHECK(spectral_convergence(x, half) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(spectral_convergence(zero, x), std::invalid_argument);
}

TEST_CASE("external evaluator hook: unconfigured, stub, failing") {
  const auto none = pesq_external("/tmp/a.wav", "/tmp/b.wav", "");
  CHECK_FALSE(none.available());
  CHECK(!none.reason.empty());

  // Stub evaluator printing a known score (the mock emits 2.60).
  const auto ok = pesq_external("/tmp/ref.wav", "/tmp/deg.wav", "echo {clean} {degraded} 2.60");
  REQUIRE(ok.available());
  CHECK(*ok.score == doctest::Approx(2.60));

  const auto fail = pesq_external("/tmp/a.wav", "/tmp/b.wav", "false {clean} {degraded}");
  CHECK_FALSE(fail.available());
  CHECK(fail.reason.find("status") != std::string::npos);

  const auto garbage = pesq_external("/tmp/a.wav", "/tmp/b.wav", "echo no score here");
  CHECK_FALSE(garbage.available());
}

TEST_CASE("report means recompute exactly from records") {
  MetricReport report;
  report.model = "lstm";
  Rng rng(55);
  for (int i = 0; i < 7; ++i) {
    UtteranceMetrics m;
    m.id = "u" + std::to_string(i);
    m.snr_noisy = rng.gaussian();
    m.snr_enhanced = rng.gaussian();
    m.stoi_noisy = rng.uniform();
    m.stoi_enhanced = rng.uniform();
    m.spectral_convergence = rng.uniform();
    report.records.push_back(m);
  }
  const MetricMeans means = report.means();
  double acc = 0.0;
  for (const auto& r : report.records) acc += r.stoi_enhanced;
  CHECK(means.stoi_enhanced == doctest::Approx(acc / 7.0).epsilon(1e-12));

  const std::string csv = to_csv(report);
  CHECK(csv.find("id,snr_noisy,snr_enhanced,stoi_noisy,stoi_enhanced") != std::string::npos);
  CHECK(csv.find("pesq") == std::string::npos);  // not configured

  report.pesq_configured = true;
  report.records[0].pesq_noisy = 1.5;
  const std::string csv2 = to_csv(report);
  CHECK(csv2.find("pesq_noisy,pesq_enhanced") != std::string::npos);
  CHECK(csv2.find("unavailable") != std::string::npos);

  const std::string json = to_json(report);
  CHECK(json.find("\"stoi_enhanced\"") != std::string::npos);
}

}  // TEST_SUITE
