// tests/unit/fft_test.cc

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

#include <complex>
#include <numbers>
#include <vector>

#include <stdexcept>
#include <string>

#include <doctest.h>

#include "neurovox/common/rng.h"

namespace {

using neurovox::Rng;
using neurovox::dsp::fft;
using neurovox::dsp::ifft;
using neurovox::dsp::rfft;

// Quadratic-time reference transform.
std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(k * j) /
                         static_cast<double>(n);
      acc += x[j] * std::complex<double>{std::cos(ang), std::sin(ang)};
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

TEST_SUITE("fft") {

TEST_CASE("matches the naive transform for power-of-two and odd sizes") {
  Rng rng(11);
  for (std::size_t n : {2ul, 8ul, 64ul, 100ul, 129ul, 512ul}) {
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = {rng.gaussian(), rng.gaussian()};
    auto got = x;
    fft(got);
    const auto want = naive_dft(x);
    double max_err = 0.0;
    for (std::size_t k = 0; k < n; ++k) max_err = std::max(max_err, std::abs(got[k] - want[k]));
    CAPTURE(n);
    CHECK(max_err < 1e-9 * static_cast<double>(n));
  }
}

TEST_CASE("inverse transform round-trips") {
  Rng rng(7);
  for (std::size_t n : {16ul, 100ul, 321ul}) {
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = {rng.gaussian(), rng.gaussian()};
    auto y = x;
    fft(y);
    ifft(y);
    double max_err = 0.0;
    for (std::size_t k = 0; k < n; ++k) max_err = std::max(max_err, std::abs(y[k] - x[k]));
    CHECK(max_err < 1e-10);
  }
}

TEST_CASE("rfft returns the non-redundant half") {
  Rng rng(3);
  std::vector<double> x(240);
  for (auto& v : x) v = rng.gaussian();
  const auto half = rfft(x, 256);
  std::vector<std::complex<double>> padded(256, {0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) padded[i] = {x[i], 0.0};
  const auto full = naive_dft(padded);
  REQUIRE(half.size() == 129);
  for (std::size_t k = 0; k < half.size(); ++k) {
    CHECK(std::abs(half[k] - full[k]) < 1e-9);
  }
}

TEST_CASE("empty input is rejected") {
  std::vector<std::complex<double>> empty;
  CHECK_THROWS_AS(fft(empty), std::invalid_argument);
}

}  // TEST_SUITE
