// core/src/io/container.cc

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

#include "neurovox/io/container.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace neurovox::io {
namespace {

static_assert(std::endian::native == std::endian::little,
              "container payloads are little-endian f64");

constexpr char kMagic[4] = {'N', 'V', 'C', '1'};

void write_container(const std::string& path, const nlohmann::json& header,
                     const double* payload, std::size_t count) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("container: cannot open for write: " + path);
  const std::string head = header.dump();
  const auto head_len = static_cast<std::uint32_t>(head.size());
  os.write(kMagic, 4);
  os.write(reinterpret_cast<const char*>(&head_len), 4);
  os.write(head.data(), static_cast<std::streamsize>(head.size()));
  os.write(reinterpret_cast<const char*>(payload),
           static_cast<std::streamsize>(count * sizeof(double)));
  if (!os) throw std::runtime_error("container: write failed: " + path);
}

std::pair<nlohmann::json, std::vector<double>> read_container(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("container: cannot open: " + path);
  char magic[4];
  std::uint32_t head_len = 0;
  is.read(magic, 4);
  is.read(reinterpret_cast<char*>(&head_len), 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("container: bad magic in " + path);
  }
  std::string head(head_len, '\0');
  is.read(head.data(), head_len);
  if (!is) throw std::runtime_error("container: truncated header in " + path);
  nlohmann::json header = nlohmann::json::parse(head, nullptr, false);
  if (header.is_discarded()) {
    throw std::runtime_error("container: unparseable header in " + path);
  }
  std::vector<char> bytes((std::istreambuf_iterator<char>(is)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() % sizeof(double) != 0) {
    throw std::runtime_error("container: payload not a multiple of 8 bytes in " + path);
  }
  std::vector<double> payload(bytes.size() / sizeof(double));
  std::memcpy(payload.data(), bytes.data(), bytes.size());
  return {std::move(header), std::move(payload)};
}

}  // namespace

void write_feature_file(const std::string& path, const std::string& kind, int frame_rate_hz,
                        const Matrix& data) {
  nlohmann::json header;
  header["kind"] = kind;
  header["frame_rate_hz"] = frame_rate_hz;
  header["frames"] = data.rows();
  header["width"] = data.cols();
  write_container(path, header, data.data(), data.size());
}

FeatureFile read_feature_file(const std::string& path, const std::string& expected_kind) {
  auto [header, payload] = read_container(path);
  FeatureFile f;
  f.kind = header.value("kind", "");
  f.frame_rate_hz = header.value("frame_rate_hz", 0);
  const std::size_t frames = header.value("frames", 0u);
  const std::size_t width = header.value("width", 0u);
  if (!expected_kind.empty() && f.kind != expected_kind) {
    throw std::runtime_error("container: " + path + " holds kind '" + f.kind +
                             "', expected '" + expected_kind + "'");
  }
  if (payload.size() != frames * width) {
    throw std::runtime_error("container: payload length does not match declared shape in " +
                             path);
  }
  f.data = Matrix(frames, width);
  std::copy(payload.begin(), payload.end(), f.data.data());
  return f;
}

void write_eeg_file(const std::string& path, const eeg::EegRecording& recording) {
  eeg::validate(recording, "write_eeg_file");
  nlohmann::json header;
  header["kind"] = "eeg_raw";
  header["sample_rate_hz"] = recording.sample_rate_hz;
  header["frames"] = recording.samples.rows();  // channels
  header["width"] = recording.samples.cols();   // samples per channel
  header["channel_labels"] = recording.channel_labels;
  write_container(path, header, recording.samples.data(), recording.samples.size());
}

eeg::EegRecording read_eeg_file(const std::string& path) {
  auto [header, payload] = read_container(path);
  if (header.value("kind", "") != "eeg_raw") {
    throw std::runtime_error("container: " + path + " is not an eeg_raw container");
  }
  eeg::EegRecording rec;
  rec.sample_rate_hz = header.value("sample_rate_hz", 0);
  const std::size_t channels = header.value("frames", 0u);
  const std::size_t samples = header.value("width", 0u);
  if (payload.size() != channels * samples) {
    throw std::runtime_error("container: payload length does not match declared shape in " +
                             path);
  }
  rec.samples = Matrix(channels, samples);
  std::copy(payload.begin(), payload.end(), rec.samples.data());
  if (header.contains("channel_labels")) {
    rec.channel_labels = header["channel_labels"].get<std::vector<std::string>>();
  }
  eeg::validate(rec, "read_eeg_file");
  return rec;
}

}  // namespace neurovox::io
