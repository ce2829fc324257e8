// core/src/io/checkpoint.cc

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

#include "neurovox/io/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace neurovox::io {
namespace {

static_assert(std::endian::native == std::endian::little,
              "checkpoint payloads are little-endian f64");

constexpr char kMagic[4] = {'N', 'V', 'C', 'K'};

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t parse_hash(const std::string& hex) {
  return std::strtoull(hex.c_str(), nullptr, 16);
}

}  // namespace

std::uint64_t fnv1a_hash(const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a_hash(const std::string& text) { return fnv1a_hash(text.data(), text.size()); }

const CheckpointArray& Checkpoint::array(const std::string& name) const {
  for (const CheckpointArray& a : arrays) {
    if (a.name == name) return a;
  }
  throw std::runtime_error("checkpoint: missing array '" + name + "'");
}

bool Checkpoint::has_array(const std::string& name) const {
  for (const CheckpointArray& a : arrays) {
    if (a.name == name) return true;
  }
  return false;
}

void save_checkpoint(const std::string& path, const Checkpoint& checkpoint) {
  std::vector<double> payload;
  nlohmann::json arrays = nlohmann::json::array();
  for (const CheckpointArray& a : checkpoint.arrays) {
    if (a.data.size() != a.element_count()) {
      throw std::invalid_argument("save_checkpoint: array '" + a.name +
                                  "' data does not match its shape");
    }
    nlohmann::json ja;
    ja["name"] = a.name;
    ja["shape"] = a.shape;
    arrays.push_back(ja);
    payload.insert(payload.end(), a.data.begin(), a.data.end());
  }

  nlohmann::json header;
  header["magic_version"] = 1;
  header["kind"] = checkpoint.kind;
  header["seed"] = checkpoint.seed;
  header["epoch"] = checkpoint.epoch;
  header["config_hash"] = hash_hex(checkpoint.config_hash);
  header["meta"] = checkpoint.meta;
  header["arrays"] = arrays;
  header["payload_doubles"] = payload.size();
  header["payload_hash"] =
      hash_hex(fnv1a_hash(payload.data(), payload.size() * sizeof(double)));

  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_checkpoint: cannot open " + path);
  const std::string head = header.dump();
  const auto head_len = static_cast<std::uint32_t>(head.size());
  os.write(kMagic, 4);
  os.write(reinterpret_cast<const char*>(&head_len), 4);
  os.write(head.data(), static_cast<std::streamsize>(head.size()));
  os.write(reinterpret_cast<const char*>(payload.data()),
           static_cast<std::streamsize>(payload.size() * sizeof(double)));
  if (!os) throw std::runtime_error("save_checkpoint: write failed: " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_checkpoint: cannot open " + path);
  char magic[4];
  std::uint32_t head_len = 0;
  is.read(magic, 4);
  is.read(reinterpret_cast<char*>(&head_len), 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("load_checkpoint: bad magic in " + path);
  }
  std::string head(head_len, '\0');
  is.read(head.data(), head_len);
  if (!is) throw std::runtime_error("load_checkpoint: truncated header in " + path);
  const nlohmann::json header = nlohmann::json::parse(head, nullptr, false);
  if (header.is_discarded()) {
    throw std::runtime_error("load_checkpoint: unparseable header in " + path);
  }

  std::vector<char> bytes((std::istreambuf_iterator<char>(is)),
                          std::istreambuf_iterator<char>());
  if (bytes.size() % sizeof(double) != 0) {
    throw std::runtime_error("load_checkpoint: payload not a multiple of 8 bytes in " + path);
  }
  std::vector<double> payload(bytes.size() / sizeof(double));
  std::memcpy(payload.data(), bytes.data(), bytes.size());

  const auto declared = header.value("payload_doubles", std::size_t{0});
  if (declared != payload.size()) {
    throw std::runtime_error("load_checkpoint: payload length does not match header in " +
                             path);
  }
  const std::uint64_t expect = parse_hash(header.value("payload_hash", std::string()));
  const std::uint64_t actual = fnv1a_hash(payload.data(), payload.size() * sizeof(double));
  if (expect != actual) {
    throw std::runtime_error("load_checkpoint: payload hash mismatch in " + path);
  }

  Checkpoint cp;
  cp.kind = header.value("kind", "");
  cp.seed = header.value("seed", std::uint64_t{0});
  cp.epoch = header.value("epoch", std::int64_t{-1});
  cp.config_hash = parse_hash(header.value("config_hash", std::string("0")));
  if (header.contains("meta")) {
    cp.meta = header["meta"].get<std::map<std::string, std::string>>();
  }

  std::size_t pos = 0;
  for (const auto& ja : header.value("arrays", nlohmann::json::array())) {
    CheckpointArray a;
    a.name = ja.value("name", "");
    a.shape = ja.value("shape", std::vector<std::size_t>{});
    const std::size_t count = a.element_count();
    if (pos + count > payload.size()) {
      throw std::runtime_error("load_checkpoint: declared shapes exceed payload in " + path);
    }
    a.data.assign(payload.begin() + static_cast<std::ptrdiff_t>(pos),
                  payload.begin() + static_cast<std::ptrdiff_t>(pos + count));
    pos += count;
    cp.arrays.push_back(std::move(a));
  }
  if (pos != payload.size()) {
    throw std::runtime_error("load_checkpoint: payload has trailing bytes in " + path);
  }
  return cp;
}

}  // namespace neurovox::io
