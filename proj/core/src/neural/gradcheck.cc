// core/src/neural/gradcheck.cc

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

#include "neurovox/neural/gradcheck.h"

#include <cmath>
#include <vector>

namespace neurovox::neural {

GradCheckReport gradient_check(const std::vector<ParamView>& params,
                               const std::function<double()>& loss,
                               const std::function<void()>& backward, double fd_step,
                               double denom_floor) {
  backward();
  // Snapshot the analytic gradients before the finite-difference probes.
  std::vector<std::vector<double>> analytic;
  analytic.reserve(params.size());
  for (const ParamView& p : params) {
    analytic.emplace_back(p.grad, p.grad + p.size);
  }

  GradCheckReport report;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const ParamView& p = params[k];
    for (std::size_t i = 0; i < p.size; ++i) {
      const double original = p.value[i];
      p.value[i] = original + fd_step;
      const double up = loss();
      p.value[i] = original - fd_step;
      const double down = loss();
      p.value[i] = original;
      const double numeric = (up - down) / (2.0 * fd_step);
      const double a = analytic[k][i];
      const double denom = std::max(denom_floor, std::abs(a) + std::abs(numeric));
      const double rel = std::abs(a - numeric) / denom;
      ++report.checked_elements;
      if (rel > report.max_rel_error) {
        report.max_rel_error = rel;
        report.worst_block = p.name;
      }
    }
  }
  return report;
}

}  // namespace neurovox::neural
