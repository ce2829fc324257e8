// benchmarks/bench_dsp.cc

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

#include <benchmark/benchmark.h>

#include "neurovox/common/rng.h"
#include "neurovox/dsp/griffin_lim.h"
#include "neurovox/dsp/mfcc.h"
#include "neurovox/dsp/resample.h"
#include "neurovox/dsp/stft.h"
#include "neurovox/eeg/eeg.h"
#include "neurovox/metrics/stoi.h"
#include "neurovox/synth/synth.h"

namespace {

using neurovox::Rng;

neurovox::dsp::Waveform one_second_speech() {
  neurovox::synth::SynthParams params;
  params.duration_s = 1.0;
  auto [speech, eeg] = neurovox::synth::synth_utterance(params, 1);
  return speech;
}

void BM_Stft(benchmark::State& state) {
  const auto x = one_second_speech();
  for (auto _ : state) {
    auto s = neurovox::dsp::stft(x, 400, 160, 512);
    benchmark::DoNotOptimize(s.magnitudes.data());
  }
}
BENCHMARK(BM_Stft);

void BM_Mfcc(benchmark::State& state) {
  const auto x = one_second_speech();
  for (auto _ : state) {
    auto m = neurovox::dsp::mfcc(x);
    benchmark::DoNotOptimize(m.coeffs.data());
  }
}
BENCHMARK(BM_Mfcc);

void BM_GriffinLim(benchmark::State& state) {
  const auto x = one_second_speech();
  const auto spec = neurovox::dsp::mfcc_invert(neurovox::dsp::mfcc(x));
  for (auto _ : state) {
    auto w = neurovox::dsp::griffin_lim(spec, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(w.samples.data());
  }
}
BENCHMARK(BM_GriffinLim)->Arg(10)->Arg(60);

void BM_Resample16kTo10k(benchmark::State& state) {
  const auto x = one_second_speech();
  for (auto _ : state) {
    auto y = neurovox::dsp::resample(x, 10000);
    benchmark::DoNotOptimize(y.samples.data());
  }
}
BENCHMARK(BM_Resample16kTo10k);

void BM_Stoi(benchmark::State& state) {
  const auto x = one_second_speech();
  Rng rng(7);
  auto noisy = x;
  for (auto& v : noisy.samples) v += 0.01 * rng.gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(neurovox::metrics::stoi(x, noisy));
  }
}
BENCHMARK(BM_Stoi);

void BM_EegFeatureExtraction(benchmark::State& state) {
  neurovox::synth::SynthParams params;
  params.duration_s = 1.0;
  auto [speech, recording] = neurovox::synth::synth_utterance(params, 2);
  const auto clean = neurovox::eeg::preprocess_eeg(recording);
  for (auto _ : state) {
    auto f = neurovox::eeg::extract_eeg_features(clean);
    benchmark::DoNotOptimize(f.features.data());
  }
}
BENCHMARK(BM_EegFeatureExtraction);

}  // namespace
