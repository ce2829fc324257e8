// core/src/synth/synth.cc

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

#include "neurovox/synth/synth.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "neurovox/common/rng.h"
#include "neurovox/dsp/fft.h"

namespace neurovox::synth {
namespace {

constexpr int kAudioRate = 16000;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct SpeechSegment {
  std::size_t start = 0;
  std::size_t length = 0;
  bool voiced = true;
  double f0_target = 0.0;
  double formants[3] = {0, 0, 0};
  double amplitude = 1.0;
};

// Parallel two-pole resonator bank; coefficients are refreshed every 10 ms
// block from linearly drifting formant tracks.
struct Resonator {
  double a1 = 0, a2 = 0, gain = 0;
  double y1 = 0, y2 = 0;

  void retune(double center_hz, double bandwidth_hz) {
    const double r = std::exp(-std::numbers::pi * bandwidth_hz / kAudioRate);
    const double theta = kTwoPi * center_hz / kAudioRate;
    a1 = 2.0 * r * std::cos(theta);
    a2 = -r * r;
    gain = (1.0 - r);
  }

  double tick(double x) {
    const double y = gain * x + a1 * y1 + a2 * y2;
    y2 = y1;
    y1 = y;
    return y;
  }
};

std::vector<SpeechSegment> plan_segments(std::size_t n_samples, const SynthParams& p,
                                         Rng& rng) {
  std::vector<SpeechSegment> segments;
  std::size_t pos = 0;
  while (pos < n_samples) {
    SpeechSegment seg;
    seg.start = pos;
    seg.voiced = rng.uniform() < 0.8;
    const double dur_s =
        seg.voiced ? rng.uniform(0.20, 0.45) : rng.uniform(0.06, 0.15);
    seg.length = std::min(n_samples - pos,
                          static_cast<std::size_t>(dur_s * kAudioRate));
    seg.f0_target = rng.uniform(p.pitch_lo_hz, p.pitch_hi_hz);
    seg.formants[0] = rng.uniform(320.0, 850.0);
    seg.formants[1] = rng.uniform(950.0, 2300.0);
    seg.formants[2] = rng.uniform(2400.0, 3300.0);
    seg.amplitude = seg.voiced ? rng.uniform(0.7, 1.0) : rng.uniform(0.2, 0.35);
    segments.push_back(seg);
    pos += seg.length;
  }
  return segments;
}

std::vector<double> synth_speech(const SynthParams& p, Rng& rng) {
  const auto n = static_cast<std::size_t>(p.duration_s * kAudioRate);
  std::vector<double> out(n, 0.0);

  const auto segments = plan_segments(n, p, rng);
  const double am_rate = rng.uniform(2.5, 4.0);
  const double am_phase = rng.uniform(0.0, kTwoPi);

  Resonator res[3];
  double f0 = rng.uniform(p.pitch_lo_hz, p.pitch_hi_hz);
  double phase = 0.0;
  double formants[3] = {segments[0].formants[0], segments[0].formants[1],
                        segments[0].formants[2]};
  const double bandwidths[3] = {90.0, 130.0, 180.0};
  const double formant_gain[3] = {1.0, 0.6, 0.35};
  constexpr std::size_t kBlock = 160;  // 10 ms coefficient refresh

  for (const SpeechSegment& seg : segments) {
    const std::size_t harmonics =
        std::max<std::size_t>(1, static_cast<std::size_t>(6800.0 / seg.f0_target));
    for (std::size_t i = 0; i < seg.length; ++i) {
      const std::size_t t = seg.start + i;
      if (t % kBlock == 0) {
        // Drift formants toward the segment targets.
        for (int k = 0; k < 3; ++k) {
          formants[k] += 0.15 * (seg.formants[k] - formants[k]);
          res[k].retune(formants[k], bandwidths[k]);
        }
      }
      f0 += 0.002 * (seg.f0_target - f0) + rng.gaussian(0.0, 0.03);
      f0 = std::clamp(f0, p.pitch_lo_hz * 0.8, p.pitch_hi_hz * 1.2);

      double src;
      if (seg.voiced) {
        phase += f0 / kAudioRate;
        src = 0.0;
        for (std::size_t h = 1; h <= harmonics; ++h) {
          // Gentle rolloff keeps the spectrum smooth up to the band edge.
          src += std::sin(kTwoPi * static_cast<double>(h) * phase) /
                 std::pow(static_cast<double>(h), 1.1);
        }
        src *= 0.25;
      } else {
        src = rng.gaussian(0.0, 0.6);
      }

      double shaped = 0.0;
      for (int k = 0; k < 3; ++k) shaped += formant_gain[k] * res[k].tick(src);

      // Deep syllabic amplitude modulation plus 10 ms segment edge ramps.
      const double am =
          0.2 + 0.8 * 0.5 *
                    (1.0 + std::sin(kTwoPi * am_rate * static_cast<double>(t) / kAudioRate +
                                    am_phase));
      const double edge = std::min({1.0, static_cast<double>(i) / 160.0,
                                    static_cast<double>(seg.length - 1 - i) / 160.0});
      out[t] = shaped * seg.amplitude * am * std::max(0.0, edge);
    }
  }

  // Normalize to a fixed working level.
  const double r = dsp::rms(out);
  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  if (r > 0.0) {
    const double scale = std::min(0.08 / r, 0.95 / peak);
    for (double& v : out) v *= scale;
  }
  return out;
}

// Speech energy and spectral centroid per 10 ms frame (the latent drivers).
void frame_features(const std::vector<double>& speech, std::vector<double>& energy,
                    std::vector<double>& centroid) {
  constexpr std::size_t kWin = 256;
  constexpr std::size_t kHop = 160;
  if (speech.size() < kWin) {
    energy.assign(1, 0.0);
    centroid.assign(1, 0.0);
    return;
  }
  const std::size_t frames = (speech.size() - kWin) / kHop + 1;
  energy.resize(frames);
  centroid.resize(frames);
  std::vector<double> buf(kWin);
  for (std::size_t f = 0; f < frames; ++f) {
    double e = 0.0;
    for (std::size_t i = 0; i < kWin; ++i) {
      buf[i] = speech[f * kHop + i];
      e += buf[i] * buf[i];
    }
    energy[f] = std::log(std::sqrt(e / kWin) + 1e-6);
    const auto spec = dsp::rfft(buf, kWin);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
      const double mag = std::abs(spec[k]);
      num += static_cast<double>(k) * mag;
      den += mag;
    }
    centroid[f] = den > 0.0 ? num / den : 0.0;
  }
}

void zscore(std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
  const double inv = var > 0.0 ? 1.0 / std::sqrt(var) : 0.0;
  for (double& x : v) x = (x - mean) * inv;
}

// Linear interpolation from the 100 Hz frame grid to 1000 Hz.
std::vector<double> upsample_to_eeg_rate(const std::vector<double>& frames,
                                         std::size_t eeg_samples) {
  std::vector<double> out(eeg_samples);
  if (frames.size() == 1) {
    std::fill(out.begin(), out.end(), frames[0]);
    return out;
  }
  const double step = static_cast<double>(frames.size() - 1) /
                      static_cast<double>(eeg_samples - 1);
  for (std::size_t i = 0; i < eeg_samples; ++i) {
    const double pos = static_cast<double>(i) * step;
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, frames.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    out[i] = frames[lo] * (1.0 - frac) + frames[hi] * frac;
  }
  return out;
}

void moving_average_inplace(std::vector<double>& v, std::size_t window) {
  if (window <= 1 || v.empty()) return;
  std::vector<double> out(v.size());
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    ++count;
    if (count > window) {
      acc -= v[i - window];
      --count;
    }
    out[i] = acc / static_cast<double>(count);
  }
  v = std::move(out);
}

// Paul Kellet's economy pink-noise filter over a gaussian source.
struct PinkNoise {
  double b0 = 0, b1 = 0, b2 = 0;
  double tick(double white) {
    b0 = 0.99765 * b0 + white * 0.0990460;
    b1 = 0.96300 * b1 + white * 0.2965164;
    b2 = 0.57000 * b2 + white * 1.0526913;
    return (b0 + b1 + b2 + white * 0.1848) / 2.5;
  }
};

}  // namespace

void validate(const SynthParams& params) {
  if (!(params.duration_s >= 1.0)) {
    throw std::invalid_argument("SynthParams: duration must be >= 1 s");
  }
  if (!(params.pitch_lo_hz > 0.0) || !(params.pitch_hi_hz > params.pitch_lo_hz)) {
    throw std::invalid_argument("SynthParams: invalid pitch range");
  }
  if (params.n_latents == 0 || params.n_coupled_latents > params.n_latents) {
    throw std::invalid_argument("SynthParams: invalid latent configuration");
  }
  if (!std::isfinite(params.coupling) || !std::isfinite(params.pink_noise_level)) {
    throw std::invalid_argument("SynthParams: non-finite levels");
  }
}

std::pair<dsp::Waveform, eeg::EegRecording> synth_utterance(const SynthParams& params,
                                                            std::uint64_t seed,
                                                            SynthDiagnostics* diagnostics) {
  validate(params);
  Rng rng(derive_seed(seed, 0x5eec));

  dsp::Waveform speech;
  speech.sample_rate_hz = kAudioRate;
  speech.samples = synth_speech(params, rng);

  const auto eeg_samples = static_cast<std::size_t>(params.duration_s * eeg::kEegRateHz);

  std::vector<double> energy, centroid;
  frame_features(speech.samples, energy, centroid);
  zscore(energy);
  zscore(centroid);
  std::vector<double> e_up = upsample_to_eeg_rate(energy, eeg_samples);
  std::vector<double> c_up = upsample_to_eeg_rate(centroid, eeg_samples);
  const auto smooth =
      static_cast<std::size_t>(params.latent_smooth_ms * eeg::kEegRateHz / 1000.0);
  moving_average_inplace(e_up, smooth);
  moving_average_inplace(c_up, smooth);

  // Corpus-level structure: coupling weights and the channel mixing matrix.
  Rng mix_rng(derive_seed(params.mixing_seed, 0x317));
  Matrix mixing(eeg::kNumChannels, params.n_latents);
  for (std::size_t i = 0; i < mixing.size(); ++i) {
    mixing.data()[i] = mix_rng.gaussian() / std::sqrt(static_cast<double>(params.n_latents));
  }
  // Latent 0 tracks energy and latent 1 tracks the centroid outright; the
  // remaining coupled latents are random mixes of the two.
  std::vector<std::pair<double, double>> couple_w(params.n_coupled_latents);
  for (std::size_t j = 0; j < couple_w.size(); ++j) {
    auto& [a, b] = couple_w[j];
    if (j == 0) {
      a = 1.0;
      b = 0.0;
    } else if (j == 1) {
      a = 0.0;
      b = 1.0;
    } else {
      a = mix_rng.gaussian();
      b = mix_rng.gaussian();
      const double norm = std::sqrt(a * a + b * b) + 1e-12;
      a /= norm;
      b /= norm;
    }
  }

  // Latent streams: coupled ones follow the (smoothed) speech features.
  Matrix latents(params.n_latents, eeg_samples);
  const double ou_rho = std::exp(-1.0 / (0.05 * eeg::kEegRateHz));
  const double ou_sigma = std::sqrt(1.0 - ou_rho * ou_rho);
  for (std::size_t j = 0; j < params.n_latents; ++j) {
    double state = 0.0;
    const bool coupled = j < params.n_coupled_latents;
    for (std::size_t t = 0; t < eeg_samples; ++t) {
      state = ou_rho * state + ou_sigma * rng.gaussian();
      if (coupled) {
        const auto& [wa, wb] = couple_w[j];
        latents(j, t) = params.coupling * (wa * e_up[t] + wb * c_up[t]) +
                        (1.0 - params.coupling) * state;
      } else {
        latents(j, t) = state;
      }
    }
  }

  eeg::EegRecording rec;
  rec.sample_rate_hz = eeg::kEegRateHz;
  rec.channel_labels = eeg::default_channel_labels();
  rec.samples = Matrix(eeg::kNumChannels, eeg_samples);
  for (std::size_t c = 0; c < eeg::kNumChannels; ++c) {
    PinkNoise pink;
    for (std::size_t t = 0; t < eeg_samples; ++t) {
      double v = 0.0;
      for (std::size_t j = 0; j < params.n_latents; ++j) v += mixing(c, j) * latents(j, t);
      // Scale into a plausible microvolt range.
      rec.samples(c, t) =
          20.0 * v + 20.0 * params.pink_noise_level * pink.tick(rng.gaussian());
    }
  }

  if (diagnostics != nullptr) {
    diagnostics->latents = std::move(latents);
    diagnostics->frame_energy = std::move(energy);
    diagnostics->frame_centroid = std::move(centroid);
  }
  return {std::move(speech), std::move(rec)};
}

dsp::MfccSequence corrupt_mfcc(const dsp::MfccSequence& m, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("corrupt_mfcc: sigma must be >= 0");
  dsp::MfccSequence out = m;
  if (sigma == 0.0) return out;
  Rng rng(derive_seed(seed, 0xc0));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs.data()[i] += rng.gaussian(0.0, sigma);
  }
  return out;
}

dsp::Waveform mix_background(const dsp::Waveform& clean, NoiseKind kind, double level_db,
                             std::uint64_t seed) {
  dsp::validate(clean, "mix_background");
  if (!std::isfinite(level_db)) {
    throw std::invalid_argument("mix_background: level_db must be finite");
  }
  const double clean_rms = dsp::rms(clean.samples);
  if (clean_rms == 0.0) {
    throw std::invalid_argument("mix_background: clean signal has zero energy");
  }

  Rng rng(derive_seed(seed, 0xb6));
  const std::size_t n = clean.samples.size();
  std::vector<double> noise(n, 0.0);
  if (kind == NoiseKind::kWhite) {
    for (double& v : noise) v = rng.gaussian();
  } else {
    // Slowly amplitude-modulated tones over a broadband noise bed.
    constexpr int kTones = 8;
    for (int k = 0; k < kTones; ++k) {
      const double freq = std::exp(rng.uniform(std::log(110.0), std::log(1800.0)));
      const double phase = rng.uniform(0.0, kTwoPi);
      const double am_rate = rng.uniform(0.3, 1.5);
      const double am_phase = rng.uniform(0.0, kTwoPi);
      for (std::size_t t = 0; t < n; ++t) {
        const double time = static_cast<double>(t) / clean.sample_rate_hz;
        const double am = 0.5 + 0.5 * std::sin(kTwoPi * am_rate * time + am_phase);
        noise[t] += am * std::sin(kTwoPi * freq * time + phase) / kTones;
      }
    }
    Resonator bed;
    bed.retune(1200.0, 1600.0);
    for (std::size_t t = 0; t < n; ++t) noise[t] += 0.5 * bed.tick(rng.gaussian(0.0, 1.0));
  }

  // Calibrated so the nominal test level (65) lands at a -5 dB mixture SNR.
  const double target_rms = clean_rms * std::pow(10.0, (level_db - 65.0 + 5.0) / 20.0);
  const double noise_rms = dsp::rms(noise);
  const double scale = noise_rms > 0.0 ? target_rms / noise_rms : 0.0;

  dsp::Waveform out = clean;
  for (std::size_t t = 0; t < n; ++t) out.samples[t] += scale * noise[t];
  return out;
}

}  // namespace neurovox::synth
