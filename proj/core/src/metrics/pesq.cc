// core/src/metrics/pesq.cc

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

#include "neurovox/metrics/pesq.h"

#include <array>
#include <cstdio>
#include <sstream>

namespace neurovox::metrics {
namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

std::string substitute(const std::string& tmpl, const std::string& key,
                       const std::string& value) {
  std::string out = tmpl;
  std::size_t pos = 0;
  while ((pos = out.find(key, pos)) != std::string::npos) {
    out.replace(pos, key.size(), value);
    pos += value.size();
  }
  return out;
}

}  // namespace

PesqResult pesq_external(const std::string& clean_path, const std::string& degraded_path,
                         const std::string& command_template) {
  PesqResult result;
  if (command_template.empty()) {
    result.reason = "no external evaluator configured";
    return result;
  }

  std::string cmd = substitute(command_template, "{clean}", shell_quote(clean_path));
  cmd = substitute(cmd, "{degraded}", shell_quote(degraded_path));
  cmd += " 2>&1";

  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    result.reason = "failed to launch evaluator";
    return result;
  }
  std::string output;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) output += buf.data();
  const int status = pclose(pipe);

  if (status != 0) {
    result.reason = "evaluator exited with status " + std::to_string(status) +
                    (output.empty() ? "" : ": " + output);
    return result;
  }

  // Last parseable float on the output wins.
  std::istringstream iss(output);
  std::string token;
  bool found = false;
  double value = 0.0;
  while (iss >> token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used == token.size()) {
        value = v;
        found = true;
      }
    } catch (...) {
      // not a number; keep scanning
    }
  }
  if (!found) {
    result.reason = "no numeric score in evaluator output" +
                    (output.empty() ? std::string() : ": " + output);
    return result;
  }
  result.score = value;
  return result;
}

}  // namespace neurovox::metrics
