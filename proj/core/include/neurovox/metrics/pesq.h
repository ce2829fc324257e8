// core/include/neurovox/metrics/pesq.h

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

#ifndef NEUROVOX_METRICS_PESQ_H_
#define NEUROVOX_METRICS_PESQ_H_

#include <optional>
#include <string>

namespace neurovox::metrics {

struct PesqResult {
  std::optional<double> score;
  std::string reason;  // why the score is unavailable, when it is

  bool available() const { return score.has_value(); }
};

// Runs a user-supplied external evaluator. The command template substitutes
// {clean} and {degraded} with the (shell-quoted) file paths and the last
// parseable float on the tool's output is taken as the score. There is no
// built-in evaluator: with no template configured, or on any tool failure,
// the metric is reported unavailable with the reason -- never fabricated.
PesqResult pesq_external(const std::string& clean_path, const std::string& degraded_path,
                         const std::string& command_template);

}  // namespace neurovox::metrics

#endif  // NEUROVOX_METRICS_PESQ_H_
