// core/src/dsp/wav_io.cc

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

#include "neurovox/dsp/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace neurovox::dsp {
namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  os.write(b, 4);
}

void put_u16(std::ostream& os, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  os.write(b, 2);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_wav: cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path);
  }

  std::size_t pos = 12;
  int channels = 0;
  int rate = 0;
  int bits = 0;
  bool have_fmt = false;
  Waveform w;
  bool have_data = false;
  while (pos + 8 <= bytes.size()) {
    const char* tag = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_len = get_u32(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_len > bytes.size()) {
      throw std::runtime_error("read_wav: truncated chunk in " + path);
    }
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw std::runtime_error("read_wav: bad fmt chunk in " + path);
      const int format = get_u16(bytes.data() + body);
      channels = get_u16(bytes.data() + body + 2);
      rate = static_cast<int>(get_u32(bytes.data() + body + 4));
      bits = get_u16(bytes.data() + body + 14);
      if (format != 1) throw std::runtime_error("read_wav: only PCM supported: " + path);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error("read_wav: data before fmt in " + path);
      if (channels != 1 || bits != 16) {
        throw std::runtime_error("read_wav: only mono 16-bit PCM supported: " + path);
      }
      const std::size_t n = chunk_len / 2;
      w.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::int16_t s =
            static_cast<std::int16_t>(get_u16(bytes.data() + body + 2 * i));
        w.samples[i] = static_cast<double>(s) / 32768.0;
      }
      have_data = true;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }
  if (!have_data) throw std::runtime_error("read_wav: no data chunk in " + path);
  w.sample_rate_hz = rate;
  return w;
}

void write_wav(const std::string& path, const Waveform& w) {
  validate(w, "write_wav");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_wav: cannot open " + path);

  const std::uint32_t data_len = static_cast<std::uint32_t>(w.samples.size() * 2);
  os.write("RIFF", 4);
  put_u32(os, 36 + data_len);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  put_u32(os, 16);
  put_u16(os, 1);  // PCM
  put_u16(os, 1);  // mono
  put_u32(os, static_cast<std::uint32_t>(w.sample_rate_hz));
  put_u32(os, static_cast<std::uint32_t>(w.sample_rate_hz * 2));
  put_u16(os, 2);
  put_u16(os, 16);
  os.write("data", 4);
  put_u32(os, data_len);
  for (double s : w.samples) {
    // Symmetric 1/32768 quantization; +1.0 saturates at 32767.
    const long q = std::lrint(std::clamp(s, -1.0, 1.0) * 32768.0);
    const auto clamped = static_cast<std::int16_t>(std::clamp(q, -32768L, 32767L));
    put_u16(os, static_cast<std::uint16_t>(clamped));
  }
  if (!os) throw std::runtime_error("write_wav: write failed: " + path);
}

}  // namespace neurovox::dsp
