// core/include/neurovox/neural/gradcheck.h

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

#ifndef NEUROVOX_NEURAL_GRADCHECK_H_
#define NEUROVOX_NEURAL_GRADCHECK_H_

#include <functional>
#include <string>
#include <vector>

#include "neurovox/neural/adam.h"

namespace neurovox::neural {

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::string worst_block;
  std::size_t checked_elements = 0;
};

// Compares analytic gradients against central finite differences for every
// element of every block.
//
//   loss:     evaluates the scalar loss at the current parameters without
//             touching gradients
//   backward: zeroes gradients, runs forward+backward once, leaves analytic
//             gradients in the views
//
// Relative error per element is |a - n| / max(floor, |a| + |n|); the report
// carries the worst offender's block name. Small models only -- the cost is
// two loss evaluations per parameter.
GradCheckReport gradient_check(const std::vector<ParamView>& params,
                               const std::function<double()>& loss,
                               const std::function<void()>& backward,
                               double fd_step = 1e-5, double denom_floor = 1e-5);

}  // namespace neurovox::neural

#endif  // NEUROVOX_NEURAL_GRADCHECK_H_
