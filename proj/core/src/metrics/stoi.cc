// core/src/metrics/stoi.cc

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

#include "neurovox/metrics/stoi.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "neurovox/dsp/fft.h"
#include "neurovox/dsp/resample.h"

namespace neurovox::metrics {
namespace {

constexpr int kStoiRateHz = 10000;
constexpr std::size_t kFrameLen = 256;
constexpr std::size_t kHop = 128;
constexpr std::size_t kFftSize = 512;
constexpr std::size_t kNumBands = 15;
constexpr double kLowestCenterHz = 150.0;
constexpr std::size_t kSegmentFrames = 30;
constexpr double kDynRangeDb = 40.0;
constexpr double kSdrBoundDb = -15.0;
constexpr double kEps = 1e-15;

// Symmetric Hann taper, positive at both ends (the flavor the reference
// algorithm uses for framing).
std::vector<double> hanning(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * (static_cast<double>(i) + 1.0) /
                                 (static_cast<double>(n) + 1.0)));
  }
  return w;
}

std::vector<std::vector<double>> frame_signal(const std::vector<double>& x,
                                              const std::vector<double>& win) {
  std::vector<std::vector<double>> frames;
  if (x.size() < kFrameLen) return frames;
  for (std::size_t start = 0; start + kFrameLen <= x.size(); start += kHop) {
    std::vector<double> f(kFrameLen);
    for (std::size_t i = 0; i < kFrameLen; ++i) f[i] = x[start + i] * win[i];
    frames.push_back(std::move(f));
  }
  return frames;
}

// Keeps the frames within kDynRangeDb of the loudest clean frame and
// overlap-adds them back into a pair of compacted signals.
void remove_silent_frames(std::vector<double>& clean, std::vector<double>& degraded) {
  const std::vector<double> win = hanning(kFrameLen);
  const auto cf = frame_signal(clean, win);
  const auto df = frame_signal(degraded, win);
  if (cf.empty()) {
    clean.clear();
    degraded.clear();
    return;
  }

  std::vector<double> energy_db(cf.size());
  double max_db = -1e300;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    double e = 0.0;
    for (double v : cf[i]) e += v * v;
    energy_db[i] = 20.0 * std::log10(std::sqrt(e) + kEps);
    max_db = std::max(max_db, energy_db[i]);
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (energy_db[i] > max_db - kDynRangeDb) kept.push_back(i);
  }

  const std::size_t out_len = kept.empty() ? 0 : (kept.size() - 1) * kHop + kFrameLen;
  std::vector<double> c_out(out_len, 0.0), d_out(out_len, 0.0);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const std::size_t base = j * kHop;
    for (std::size_t i = 0; i < kFrameLen; ++i) {
      c_out[base + i] += cf[kept[j]][i];
      d_out[base + i] += df[kept[j]][i];
    }
  }
  clean = std::move(c_out);
  degraded = std::move(d_out);
}

// One-third-octave band matrix: band j covers FFT bins whose nearest band
// edges are 150 * 2^((2j-1)/6) and 150 * 2^((2j+1)/6).
std::vector<std::pair<std::size_t, std::size_t>> third_octave_bins() {
  const std::size_t n_bins = kFftSize / 2 + 1;
  std::vector<double> f(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    f[k] = static_cast<double>(k) * kStoiRateHz / static_cast<double>(kFftSize);
  }
  auto nearest_bin = [&f](double target) {
    std::size_t best = 0;
    double best_d = std::abs(f[0] - target);
    for (std::size_t k = 1; k < f.size(); ++k) {
      const double d = std::abs(f[k] - target);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  };

  std::vector<std::pair<std::size_t, std::size_t>> bands(kNumBands);
  for (std::size_t j = 0; j < kNumBands; ++j) {
    const double lo = kLowestCenterHz * std::pow(2.0, (2.0 * static_cast<double>(j) - 1.0) / 6.0);
    const double hi = kLowestCenterHz * std::pow(2.0, (2.0 * static_cast<double>(j) + 1.0) / 6.0);
    bands[j] = {nearest_bin(lo), nearest_bin(hi)};
  }
  return bands;
}

// frames x bands envelope matrix: sqrt of summed power per band.
std::vector<std::vector<double>> band_envelopes(const std::vector<double>& x) {
  const std::vector<double> win = hanning(kFrameLen);
  const auto frames = frame_signal(x, win);
  const auto bands = third_octave_bins();
  std::vector<std::vector<double>> env(frames.size(), std::vector<double>(kNumBands, 0.0));
  for (std::size_t m = 0; m < frames.size(); ++m) {
    const auto spec = dsp::rfft(frames[m], kFftSize);
    for (std::size_t j = 0; j < kNumBands; ++j) {
      double acc = 0.0;
      for (std::size_t k = bands[j].first; k < bands[j].second; ++k) {
        acc += std::norm(spec[k]);
      }
      env[m][j] = std::sqrt(acc);
    }
  }
  return env;
}

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - ma) * (b[i] - mb);
    da += (a[i] - ma) * (a[i] - ma);
    db += (b[i] - mb) * (b[i] - mb);
  }
  return num / (std::sqrt(da) * std::sqrt(db) + kEps);
}

}  // namespace

double stoi(const dsp::Waveform& clean, const dsp::Waveform& degraded) {
  dsp::validate(clean, "stoi(clean)");
  dsp::validate(degraded, "stoi(degraded)");
  if (clean.sample_rate_hz != degraded.sample_rate_hz) {
    throw std::invalid_argument("stoi: sample-rate mismatch");
  }

  const std::size_t len = std::min(clean.samples.size(), degraded.samples.size());
  dsp::Waveform c{std::vector<double>(clean.samples.begin(), clean.samples.begin() + len),
                  clean.sample_rate_hz};
  dsp::Waveform d{
      std::vector<double>(degraded.samples.begin(), degraded.samples.begin() + len),
      degraded.sample_rate_hz};

  c = dsp::resample(c, kStoiRateHz);
  d = dsp::resample(d, kStoiRateHz);

  std::vector<double> cs = std::move(c.samples);
  std::vector<double> ds = std::move(d.samples);
  remove_silent_frames(cs, ds);

  const auto env_c = band_envelopes(cs);
  const auto env_d = band_envelopes(ds);
  if (env_c.size() < kSegmentFrames) {
    throw std::invalid_argument(
        "stoi: too little non-silent signal for one 30-frame segment");
  }

  const double clip_gain = std::pow(10.0, -kSdrBoundDb / 20.0);  // 10^(15/20)
  double sum = 0.0;
  std::size_t count = 0;
  std::vector<double> xj(kSegmentFrames), yj(kSegmentFrames);
  for (std::size_t m = kSegmentFrames; m <= env_c.size(); ++m) {
    for (std::size_t j = 0; j < kNumBands; ++j) {
      double nx = 0.0, ny = 0.0;
      for (std::size_t t = 0; t < kSegmentFrames; ++t) {
        xj[t] = env_c[m - kSegmentFrames + t][j];
        yj[t] = env_d[m - kSegmentFrames + t][j];
        nx += xj[t] * xj[t];
        ny += yj[t] * yj[t];
      }
      // Scale the degraded segment to the clean energy, then bound the
      // per-cell distortion at -15 dB SDR.
      const double alpha = std::sqrt(nx) / (std::sqrt(ny) + kEps);
      for (std::size_t t = 0; t < kSegmentFrames; ++t) {
        yj[t] = std::min(yj[t] * alpha, xj[t] * (1.0 + clip_gain));
      }
      sum += correlation(xj, yj);
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

}  // namespace neurovox::metrics
