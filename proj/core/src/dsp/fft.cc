// core/src/dsp/fft.cc

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

#include "neurovox/dsp/fft.h"

#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace neurovox::dsp {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Precomputed tables for one radix-2 size.
struct Radix2Plan {
  std::vector<std::size_t> bitrev;
  std::vector<std::complex<double>> twiddles;  // exp(-i*pi*k/half) per stage, packed

  explicit Radix2Plan(std::size_t n) {
    bitrev.resize(n);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < log2n; ++b) r |= ((i >> b) & 1) << (log2n - 1 - b);
      bitrev[i] = r;
    }
    // One table of n/2 roots serves every stage via stride indexing.
    twiddles.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double ang = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
      twiddles[k] = {std::cos(ang), std::sin(ang)};
    }
  }
};

const Radix2Plan& radix2_plan(std::size_t n) {
  thread_local std::unordered_map<std::size_t, Radix2Plan> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Radix2Plan(n)).first;
  return it->second;
}

void fft_pow2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  const Radix2Plan& plan = radix2_plan(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = plan.bitrev[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> w = plan.twiddles[k * stride];
        const std::complex<double> t = w * a[base + k + half];
        const std::complex<double> u = a[base + k];
        a[base + k] = u + t;
        a[base + k + half] = u - t;
      }
    }
  }
}

// Bluestein tables for one arbitrary size.
struct BluesteinPlan {
  std::size_t conv_size;
  std::vector<std::complex<double>> chirp;     // exp(-i*pi*k^2/n), k < n
  std::vector<std::complex<double>> kernel_f;  // FFT of the conjugate-chirp kernel

  explicit BluesteinPlan(std::size_t n) {
    conv_size = next_pow2(2 * n - 1);
    chirp.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the angle argument small for large k.
      const std::size_t k2 = (k * k) % (2 * n);
      const double ang = -kPi * static_cast<double>(k2) / static_cast<double>(n);
      chirp[k] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::complex<double>> b(conv_size, {0.0, 0.0});
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
      b[k] = std::conj(chirp[k]);
      b[conv_size - k] = std::conj(chirp[k]);
    }
    fft_pow2(b);
    kernel_f = std::move(b);
  }
};

const BluesteinPlan& bluestein_plan(std::size_t n) {
  thread_local std::unordered_map<std::size_t, BluesteinPlan> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, BluesteinPlan(n)).first;
  return it->second;
}

void fft_bluestein(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  const BluesteinPlan& plan = bluestein_plan(n);
  std::vector<std::complex<double>> buf(plan.conv_size, {0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) buf[k] = a[k] * plan.chirp[k];
  fft_pow2(buf);
  for (std::size_t k = 0; k < plan.conv_size; ++k) buf[k] *= plan.kernel_f[k];
  // Inverse FFT of the product, via conjugation.
  for (auto& v : buf) v = std::conj(v);
  fft_pow2(buf);
  const double scale = 1.0 / static_cast<double>(plan.conv_size);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = std::conj(buf[k]) * scale * plan.chirp[k];
  }
}

}  // namespace

void fft(std::vector<std::complex<double>>& a) {
  if (a.empty()) throw std::invalid_argument("fft: empty input");
  if (is_pow2(a.size())) {
    fft_pow2(a);
  } else {
    fft_bluestein(a);
  }
}

void ifft(std::vector<std::complex<double>>& a) {
  for (auto& v : a) v = std::conj(v);
  fft(a);
  const double scale = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v = std::conj(v) * scale;
}

std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t fft_size) {
  if (fft_size == 0) throw std::invalid_argument("rfft: fft_size must be positive");
  if (x.size() > fft_size) throw std::invalid_argument("rfft: input longer than fft_size");
  std::vector<std::complex<double>> a(fft_size, {0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = {x[i], 0.0};
  fft(a);
  a.resize(fft_size / 2 + 1);
  return a;
}

}  // namespace neurovox::dsp
