// core/src/eeg/eeg.cc

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

#include "neurovox/eeg/eeg.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "neurovox/dsp/fft.h"
#include "neurovox/dsp/iir.h"

namespace neurovox::eeg {
namespace {

// Near-constant threshold for the kurtosis convention, relative to the mean
// square so the choice is scale invariant.
constexpr double kDegenerateVarianceRatio = 1e-20;

double rms_of(std::span<const double> w) {
  double acc = 0.0;
  for (double v : w) acc += v * v;
  return std::sqrt(acc / static_cast<double>(w.size()));
}

double zcr_of(std::span<const double> w) {
  std::size_t flips = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const bool prev_neg = w[i - 1] < 0.0;  // sign(0) = +1
    const bool cur_neg = w[i] < 0.0;
    if (prev_neg != cur_neg) ++flips;
  }
  return static_cast<double>(flips) / static_cast<double>(w.size() - 1);
}

double mean_of(std::span<const double> w) {
  double acc = 0.0;
  for (double v : w) acc += v;
  return acc / static_cast<double>(w.size());
}

double kurtosis_of(std::span<const double> w) {
  const double mu = mean_of(w);
  double m2 = 0.0, m4 = 0.0, ms = 0.0;
  for (double v : w) {
    const double d = v - mu;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
    ms += v * v;
  }
  const double n = static_cast<double>(w.size());
  m2 /= n;
  m4 /= n;
  ms /= n;
  if (m2 <= kDegenerateVarianceRatio * ms || m2 == 0.0) return 0.0;
  return m4 / (m2 * m2);
}

double pse_of(std::span<const double> w) {
  // Periodogram of the raw window, DC excluded, natural log.
  const auto bins = dsp::rfft(w, w.size());
  double total = 0.0;
  std::vector<double> power(bins.size());
  for (std::size_t k = 1; k < bins.size(); ++k) {
    power[k] = std::norm(bins[k]);
    total += power[k];
  }
  if (total <= 0.0) return 0.0;
  double entropy = 0.0;
  for (std::size_t k = 1; k < bins.size(); ++k) {
    const double p = power[k] / total;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

}  // namespace

std::vector<std::string> default_channel_labels() {
  return {"Fp1", "Fp2", "F7",  "F3",  "Fz",  "F4",  "F8",  "FC5", "FC1", "FC2", "FC6",
          "T7",  "C3",  "Cz",  "C4",  "T8",  "TP9", "CP5", "CP1", "CP2", "CP6", "TP10",
          "P7",  "P3",  "Pz",  "P4",  "P8",  "PO9", "O1",  "Oz",  "O2"};
}

void validate(const EegRecording& x, const std::string& what) {
  if (x.samples.rows() != kNumChannels) {
    throw std::invalid_argument(what + ": expected exactly 31 data channels, got " +
                                std::to_string(x.samples.rows()));
  }
  if (x.sample_rate_hz != kEegRateHz) {
    throw std::invalid_argument(what + ": EEG sample rate must be 1000 Hz");
  }
  if (!x.samples.all_finite()) {
    throw std::invalid_argument(what + ": non-finite sample");
  }
}

std::size_t feature_column(std::size_t channel, WindowFeature feature) {
  return channel * kFeaturesPerChannel + static_cast<std::size_t>(feature);
}

double window_feature(std::span<const double> window, WindowFeature kind) {
  if (window.size() < 2) {
    throw std::invalid_argument("window_feature: window length must be >= 2");
  }
  switch (kind) {
    case WindowFeature::kRms:
      return rms_of(window);
    case WindowFeature::kZcr:
      return zcr_of(window);
    case WindowFeature::kMwa:
      return mean_of(window);
    case WindowFeature::kKurtosis:
      return kurtosis_of(window);
    case WindowFeature::kPse:
      return pse_of(window);
  }
  throw std::invalid_argument("window_feature: unknown feature kind");
}

EegRecording preprocess_eeg(const EegRecording& x) {
  validate(x, "preprocess_eeg");

  dsp::IirFilterSpec band;
  band.kind = dsp::FilterKind::kBandpass;
  band.order = 4;
  band.cutoffs_hz = {0.1, 70.0};
  band.sample_rate_hz = x.sample_rate_hz;
  const dsp::BiquadCascade bandpass = dsp::design_iir(band);

  dsp::IirFilterSpec notch;
  notch.kind = dsp::FilterKind::kNotch;
  notch.order = 2;
  notch.cutoffs_hz = {60.0};
  notch.sample_rate_hz = x.sample_rate_hz;
  const dsp::BiquadCascade powerline = dsp::design_iir(notch);

  EegRecording y = x;
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    dsp::filter_apply_inplace(bandpass, y.samples.row(c));
    dsp::filter_apply_inplace(powerline, y.samples.row(c));
  }
  // Artifact removal stage is a deliberate no-op: the synthetic corpus has no
  // EOG/EMG components, and component selection is not automatable here.
  return y;
}

EegFeatureSequence extract_eeg_features(const EegRecording& x) {
  validate(x, "extract_eeg_features");
  const std::size_t n = x.n_samples();
  if (n < kFeatureWindowSamples) {
    throw std::invalid_argument("extract_eeg_features: recording shorter than one window");
  }
  const std::size_t frames = (n - kFeatureWindowSamples) / kFeatureHopSamples + 1;

  EegFeatureSequence out;
  out.features = Matrix(frames, kFeatureWidth);
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    const auto channel = x.samples.row(c);
    for (std::size_t f = 0; f < frames; ++f) {
      const std::span<const double> window =
          channel.subspan(f * kFeatureHopSamples, kFeatureWindowSamples);
      for (std::size_t j = 0; j < kFeaturesPerChannel; ++j) {
        const auto kind = static_cast<WindowFeature>(j);
        out.features(f, feature_column(c, kind)) = window_feature(window, kind);
      }
    }
  }
  return out;
}

}  // namespace neurovox::eeg
